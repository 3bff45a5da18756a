"""The twelve acceptance criteria, each at exact (zero) tolerance.

Every test records a PASS/FAIL line that is printed in the terminal summary.
"""
import random
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE
from superchevalley import kostant as K
from superchevalley import supergroup as G
from superchevalley.carriers import Carrier
from superchevalley.scalars import A, SpecializationError, check_grouplike, in_Za
from superchevalley.superalgebra import (
    build_structure_table, check_integrality, check_jacobi, verify_chevalley_axioms,
)


def record(n: int, desc: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[n] = (ok, desc)
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {desc}")
    assert ok, detail or desc


def words(seed: int, count: int, max_len: int = 6):
    rng = random.Random(seed)
    return [K.random_word(rng, max_len) for _ in range(count)]


def test_01_chevalley_axioms():
    t0 = time.perf_counter()
    rep = verify_chevalley_axioms(build_structure_table())
    dt = time.perf_counter() - t0
    record(1, f"Chevalley axioms (a)-(d): {rep.summary()} in {dt:.2f}s",
           rep.ok and dt < 5, "; ".join(rep.violations[:5]))


def test_02_super_jacobi():
    t0 = time.perf_counter()
    rep = check_jacobi(build_structure_table())
    dt = time.perf_counter() - t0
    record(2, f"super-Jacobi on 17^3 triples: {rep.summary()} in {dt:.2f}s",
           rep.ok and rep.checks == 4913 and dt < 30, "; ".join(rep.violations[:5]))


def test_03_integrality():
    rep = check_integrality(build_structure_table())
    bad = []
    for w in words(3, 500):
        e = K.straighten(w)
        bad += [c for c in e.coefficients() if not in_Za(c)]
    record(3, f"integrality: {len(rep.violations)} table failures, {len(bad)} Z_a failures "
              "over 500 straightened words", rep.ok and not bad)


def test_04_confluence():
    diff = sum(K.straighten(w, "leftmost") != K.straighten(w, "rightmost") for w in words(4, 500))
    record(4, f"confluence of two strategies on 500 words: {diff} disagreements", diff == 0)


def test_05_representation():
    mismatches = 0
    for w in words(5, 200):
        if K.act_on_adjoint(K.straighten(w)) != K.word_matrix(w):
            mismatches += 1
    non_integral = 0
    for atom in K.kostant_generators(max_power=4, max_degree=4):
        M = K.act_on_adjoint(K.atom_element(atom), check=False)
        non_integral += sum(not in_Za(c) for row in M for c in row)
    record(5, f"adjoint action: {mismatches} mismatches over 200 words, "
              f"{non_integral} non-Z_a entries over the generators", mismatches == 0 and non_integral == 0)


def test_06_lemma_suite():
    t0 = time.perf_counter()
    reps = G.check_lemmas(4)[:3]
    dt = time.perf_counter() - t0
    bad = sum(len(r.violations) for r in reps)
    checks = sum(r.checks for r in reps)
    record(6, f"commutator identities (odd-even, odd-odd, torus) over Lambda(4): {bad} failures / {checks} checks in {dt:.2f}s",
           bad == 0 and dt < 60)


def test_07_big_cell():
    car = Carrier.grassmann(6)
    rng = random.Random(7)
    bad = 0
    for _ in range(100):
        g = G.GroupElement.from_records(car, G.random_group_word(car, rng, 8))
        fac = G.factorize_big_cell(g, verify=False)
        again = G.factorize_big_cell(fac.records(), verify=False)
        ok = (fac.element() == g and fac.is_ordered() and again.records() == fac.records())
        bad += not ok
    record(7, f"big-cell factorization of 100 words over Lambda(6): {bad} failures", bad == 0)


def test_08_torus_identities():
    rep = G.check_torus_identities(Carrier.grassmann(4))
    record(8, f"torus-coroot identities: {rep.summary()}", rep.ok)


def test_09_grouplike():
    results = [check_grouplike(A ** k, 8) for k in (0, 1, 2)]

    def corrupted(z, n):
        from superchevalley.scalars import binomial
        return binomial(z, n) + (1 if n == 3 else 0)

    mutant = check_grouplike(A, 8, coefficient=corrupted)
    record(9, f"group-like for a^0, a^1, a^2: {results}; corrupted series: {mutant}",
           all(results) and not mutant)


def test_10_semidirect():
    rep = G.check_semidirect(Carrier.square_zero(8))
    record(10, f"A_1^2 = 0 semidirect checks on 8 odd generators: {rep.summary()}", rep.ok)


def test_11_lie_functor():
    rep = G.lie_functor_check()
    record(11, f"Lie functor: {rep.summary()}, dimension {rep.even_dim}|{rep.odd_dim}",
           rep.ok and rep.entries == 289 and (rep.even_dim, rep.odd_dim) == (9, 8))


def test_12_specialization():
    ok = True
    for a0 in (2, 3, -3, Fraction(1, 2)):
        t = build_structure_table(a0)
        ok &= verify_chevalley_axioms(t).ok and check_jacobi(t).ok
    rejected = 0
    for a0 in (0, -1):
        try:
            build_structure_table(a0)
        except SpecializationError:
            rejected += 1
    record(12, f"specialization at 2, 3, -3, 1/2 passes suites 1-2; {rejected}/2 excluded values rejected",
           ok and rejected == 2)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
