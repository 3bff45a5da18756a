import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superchevalley import roots as R
from superchevalley import supergroup as G
from superchevalley.carriers import Carrier
from superchevalley.roots import CartanElement, Root, coroot
from superchevalley.scalars import A, ONE_PLUS_A

CAR = Carrier.grassmann(4)
x1, x2, x3, x4 = (CAR.xi(i) for i in range(1, 5))
EVEN_ROOTS = [r for r in R.all_roots() if r.is_even]
ODD_ROOTS = [r for r in R.all_roots() if r.is_odd]

even_params = st.tuples(st.integers(-3, 3), st.integers(-2, 2)).map(lambda p: p[0] + p[1] * x1 * x2)
odd_params = st.tuples(st.integers(-2, 2), st.integers(-2, 2)).map(lambda p: p[0] * x3 + p[1] * x4)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(EVEN_ROOTS), even_params, even_params)
def test_even_root_subgroup_is_additive(alpha, s, t):
    assert G.x_even(alpha, s) * G.x_even(alpha, t) == G.x_even(alpha, s + t)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(ODD_ROOTS), odd_params, odd_params)
def test_odd_root_subgroup_is_additive(gamma, th, eta):
    assert G.x_odd(gamma, th) * G.x_odd(gamma, eta) == G.x_odd(gamma, th + eta)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([1, 2, 3]), st.integers(-2, 2), st.integers(-2, 2))
def test_atype_torus_is_multiplicative(i, p, q):
    H = CartanElement.basis(i)
    t, u = 1 + p * x1 * x2, 1 + q * x3 * x4
    assert G.h_atype(H, t) * G.h_atype(H, u) == G.h_atype(H, t * u)


def test_atype_agrees_with_classical_on_even_coroots():
    t = 1 + x1 * x2 + 3 * x3 * x4
    for alpha in R.even_positive():
        H = coroot(alpha)
        assert G.h_atype(H, t) == G.h_classical(H, t)


def test_generator_validation():
    with pytest.raises(G.GroupError):
        G.x_even(ODD_ROOTS[0], CAR.one())
    with pytest.raises(G.GroupError):
        G.x_odd(ODD_ROOTS[0], CAR.one())
    with pytest.raises(G.GroupError):
        G.x_even(EVEN_ROOTS[0], x1)
    with pytest.raises(G.GroupError):
        G.h_atype(CartanElement.basis(1), CAR.scalar(2))
    with pytest.raises(G.GroupError):
        G.h_classical(CartanElement.basis(1), x1 * x2)


def test_inverse_and_even_supermatrix():
    g = G.x_even(EVEN_ROOTS[0], CAR.scalar(2)) * G.x_odd(ODD_ROOTS[1], x1) * G.h_atype(
        CartanElement.basis(2), 1 + x3 * x4)
    assert (g * g.inverse()).is_identity()
    assert g.is_even_supermatrix()
    assert G.x_even(EVEN_ROOTS[2], CAR.scalar(5)).entries_in_Za()


def test_torus_conjugation():
    gamma = Root((1, -1, -1))
    H = CartanElement.basis(1)
    t = CAR.scalar(2)
    conj = G.conjugate_by_torus(G.h_classical(coroot(Root((0, 2, 0))), t), G.x_odd(gamma, x1))
    n = R.pairing(gamma, coroot(Root((0, 2, 0)))).constant_value()
    assert conj == G.x_odd(gamma, t ** int(n) * x1)
    with pytest.raises(G.GroupError):
        G.conjugate_by_torus(G.x_odd(gamma, x2), G.x_odd(gamma, x1))
    assert G.h_atype(H, CAR.one()).is_identity()


def test_lemma_a_constants_are_integral():
    for gamma in ODD_ROOTS:
        for alpha in EVEN_ROOTS:
            for c in G.lemma_a_constants(gamma, alpha).values():
                assert c.is_integer()


def test_lemma_b_opposite_pair_example():
    gamma = Root((1, -1, -1))
    got = G.commutator(G.x_odd(gamma, x1), G.x_odd(-gamma, x2))
    assert got == G.predicted_lemma_b(gamma, -gamma, x1, x2)
    assert not got.is_identity()


def test_lemma_suites_pass():
    for rep in G.check_lemmas(4):
        assert rep.ok, rep.summary()


def test_factorization_example():
    gp = Root((1, 1, 1))
    gm = -gp
    word = [G.GeneratorRecord("xO", gp, None, x1), G.GeneratorRecord("xO", gm, None, x2)]
    fac = G.factorize_big_cell(G.GroupElement.from_records(CAR, word))
    assert fac.is_ordered()
    assert [r for r, _ in fac.oddNeg] == [gm]
    assert [r for r, _ in fac.oddPos] == [gp]
    assert len(fac.g0) == 1 and fac.g0[0].kind == "hA"
    assert fac.to_json()["schema"] == 1


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_factorization_roundtrip_and_idempotence(seed):
    rng = random.Random(seed)
    word = G.random_group_word(CAR, rng, max_len=6)
    if not word:
        return
    g = G.GroupElement.from_records(CAR, word)
    fac = G.factorize_big_cell(g)
    assert fac.element() == g
    again = G.factorize_big_cell(G.GroupElement.from_records(CAR, fac.records()))
    assert again.records() == fac.records()


def test_semidirect_square_zero():
    rep = G.check_semidirect(Carrier.square_zero(6), samples=5)
    assert rep.ok, rep.summary()


def test_lie_functor_on_sample_pairs():
    rep = G.lie_functor_check(pairs=[(0, 3), (3, 9), (9, 16), (12, 16), (13, 14)])
    assert rep.ok, rep.summary()
    assert (rep.even_dim, rep.odd_dim) == (9, 8)


def test_torus_power_kinds():
    t = 1 + x1 * x2
    assert G.torus_power("hA", t, A) == 1 + A * x1 * x2
    assert G.torus_power("hC", t, ONE_PLUS_A - A) == t
    with pytest.raises(G.GroupError):
        G.torus_power("hC", t, A)
