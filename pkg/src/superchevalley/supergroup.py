"""Chevalley supergroup elements acting on the adjoint module over a carrier.

A GroupElement is a sparse 17x17 matrix over a carrier together with the word
of generator records it was built from; inverses are taken through the word.

For an odd root vector ``X`` and an odd parameter ``th`` the operator of
``th*X`` on ``V(A) = A (x) V`` has entries ``th * ad(X)_ij * (-1)**p(j)``:
moving ``th`` past an odd basis vector costs a sign.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import roots as R
from .carriers import Carrier, CarrierElement, CarrierError, in_Pa, invert_unit, p_map, power_za
from .kostant import divided_ad_power
from .roots import CartanElement, Root, coroot, even_coroot_coefficients, pairing
from .scalars import ONE, ZERO, ScalarA, in_Za, render_scalar
from .superalgebra import (
    BASIS, DIM, PARITY, ROOT_INDEX, Report, SuperVector, adjoint_sparse, build_structure_table,
    structure_constant, weight_of, sigma,
)

Sparse = dict[int, dict[int, CarrierElement]]


class GroupError(ValueError):
    pass


# ---------------------------------------------------------------------------
# sparse matrices over a carrier


def _identity(car: Carrier) -> Sparse:
    return {i: {i: car.one()} for i in range(DIM)}


def _mat_mul(X: Sparse, Y: Sparse) -> Sparse:
    out: Sparse = {}
    for i, row in X.items():
        acc: dict[int, CarrierElement] = {}
        for k, a in row.items():
            yk = Y.get(k)
            if not yk:
                continue
            for j, b in yk.items():
                p = a * b
                if p:
                    acc[j] = acc[j] + p if j in acc else p
        acc = {j: v for j, v in acc.items() if v}
        if acc:
            out[i] = acc
    return out


def _mat_add(X: Sparse, Y: Sparse) -> Sparse:
    out = {i: dict(r) for i, r in X.items()}
    for i, row in Y.items():
        o = out.setdefault(i, {})
        for j, v in row.items():
            o[j] = o[j] + v if j in o else v
    return {i: {j: v for j, v in r.items() if v} for i, r in out.items() if any(r.values())}


def _operator(car: Carrier, coeff: CarrierElement, idx: int) -> Sparse:
    """Matrix of ``coeff * b_idx`` acting on V(A)."""
    odd = PARITY[idx] == 1
    out: Sparse = {}
    for i, row in adjoint_sparse(idx).items():
        out[i] = {}
        for j, c in row.items():
            v = coeff * (-c if odd and PARITY[j] else c)
            if v:
                out[i][j] = v
    return {i: r for i, r in out.items() if r}


def _scaled(car: Carrier, M: Sparse, c: CarrierElement) -> Sparse:
    out = {i: {j: v * c for j, v in r.items()} for i, r in M.items()}
    return {i: {j: v for j, v in r.items() if v} for i, r in out.items()}


# ---------------------------------------------------------------------------
# generator records


@dataclass(frozen=True)
class GeneratorRecord:
    """``kind`` is one of "xE", "xO", "hC", "hA"."""

    kind: str
    root: Root | None
    H: CartanElement | None
    param: CarrierElement

    def __post_init__(self):
        p = self.param
        if self.kind == "xE":
            if not (self.root and self.root.is_even):
                raise GroupError("xE needs an even root")
            if not p.is_even():
                raise GroupError(f"xE parameter {p.render()} is not even")
        elif self.kind == "xO":
            if not (self.root and self.root.is_odd):
                raise GroupError("xO needs an odd root")
            if not p.is_odd():
                raise GroupError(f"xO parameter {p.render()} is not odd")
        elif self.kind == "hC":
            if self.H is None or even_coroot_coefficients(self.H) is None:
                raise GroupError("hC needs an integer combination of even coroots")
            if not p.is_even() or not p.constant_term():
                raise GroupError(f"hC parameter {p.render()} is not an even unit")
        elif self.kind == "hA":
            if self.H is None or not self.H.in_h_Za():
                raise GroupError("hA needs H with Z[a]-coordinates")
            if not in_Pa(p):
                raise GroupError(f"hA parameter {p.render()} is not in P_a = 1 + N(A_0)")
        else:
            raise GroupError(f"unknown generator kind {self.kind!r}")

    @property
    def carrier(self) -> Carrier:
        return self.param.carrier

    @property
    def is_odd(self) -> bool:
        return self.kind == "xO"

    @property
    def is_torus(self) -> bool:
        return self.kind in ("hC", "hA")

    def is_trivial(self) -> bool:
        if self.kind in ("xE", "xO"):
            return self.param.is_zero()
        return self.param == 1

    def inverse(self) -> "GeneratorRecord":
        if self.kind in ("xE", "xO"):
            return GeneratorRecord(self.kind, self.root, self.H, -self.param)
        return GeneratorRecord(self.kind, self.root, self.H, invert_unit(self.param))

    def matrix(self) -> Sparse:
        return _record_matrix(self)

    def render(self) -> str:
        p = self.param.render()
        if self.kind in ("xE", "xO"):
            return f"{self.kind}({_root_text(self.root)}; {p})"
        return f"{self.kind}({_cartan_text(self.H)}; {p})"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "param": self.param.render()}
        if self.root is not None:
            out["root"] = self.root.name()
        if self.H is not None:
            out["H"] = [render_scalar(z) for z in self.H.coords]
        return out


def _root_text(r: Root) -> str:
    return r.name()


def _cartan_text(H: CartanElement) -> str:
    for i in (1, 2, 3):
        if H == CartanElement.basis(i):
            return f"H{i}"
    for r in R.all_roots():
        if r.is_positive and coroot(r) == H:
            return f"H[{r.name()}]"
    parts = []
    for i, z in enumerate(H.coords):
        if z:
            parts.append(f"({render_scalar(z)})*H{i + 1}")
    return " + ".join(parts) if parts else "0"


def _mu(j: int, H: CartanElement) -> ScalarA:
    return pairing(weight_of(j), H)


@lru_cache(maxsize=None)
def _ad_powers(idx: int) -> tuple[Sparse, ...]:
    """``ad(b_idx)^n / n!`` as sparse scalar matrices, until zero."""
    ad = adjoint_sparse(idx)
    out = []
    cur = {i: {i: ONE} for i in range(DIM)}
    n = 0
    while cur:
        out.append(cur)
        n += 1
        nxt: dict[int, dict[int, ScalarA]] = {}
        for i, row in ad.items():
            acc: dict[int, ScalarA] = {}
            for k, a in row.items():
                for j, b in cur.get(k, {}).items():
                    acc[j] = acc.get(j, ZERO) + a * b
            acc = {j: v / n for j, v in acc.items() if v}
            if acc:
                nxt[i] = acc
        cur = nxt
    return tuple(out)


def _record_matrix(rec: GeneratorRecord) -> Sparse:
    car = rec.carrier
    t = rec.param
    if rec.kind == "xE":
        out: Sparse = {}
        tn = car.one()
        for n, P in enumerate(_ad_powers(ROOT_INDEX[rec.root.coords])):
            if n:
                tn = tn * t
                if tn.is_zero():
                    break
            for i, row in P.items():
                o = out.setdefault(i, {})
                for j, c in row.items():
                    v = tn * c
                    o[j] = o[j] + v if j in o else v
        return {i: {j: v for j, v in r.items() if v} for i, r in out.items()}
    if rec.kind == "xO":
        return _mat_add(_identity(car), _operator(car, t, ROOT_INDEX[rec.root.coords]))
    out = {}
    for j in range(DIM):
        mu = _mu(j, rec.H)
        if rec.kind == "hC":
            if not mu.is_integer():
                raise GroupError(f"weight pairing {mu} is not an integer")
            v = t ** int(mu.constant_value())
        else:
            v = power_za(t, mu)
        out[j] = {j: v}
    return out


# ---------------------------------------------------------------------------
# group elements


class GroupElement:
    __slots__ = ("carrier", "entries", "word")

    def __init__(self, carrier: Carrier, entries: Sparse, word: Sequence[GeneratorRecord] | None = ()):
        self.carrier = carrier
        self.entries = entries
        self.word = None if word is None else tuple(word)

    @classmethod
    def identity(cls, carrier: Carrier) -> "GroupElement":
        return cls(carrier, _identity(carrier), ())

    @classmethod
    def from_records(cls, carrier: Carrier, records: Iterable[GeneratorRecord]) -> "GroupElement":
        g = cls.identity(carrier)
        for r in records:
            if r.carrier != carrier:
                raise CarrierError("carrier mismatch in word")
            g = g * cls(carrier, r.matrix(), (r,))
        return g

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if other.carrier != self.carrier:
            raise CarrierError(f"carrier mismatch: {self.carrier} vs {other.carrier}")
        word = None if self.word is None or other.word is None else self.word + other.word
        return GroupElement(self.carrier, _mat_mul(self.entries, other.entries), word)

    def inverse(self) -> "GroupElement":
        if self.word is None:
            raise GroupError("inverse needs the generator word")
        return GroupElement.from_records(self.carrier, [r.inverse() for r in reversed(self.word)])

    def entry(self, i: int, j: int) -> CarrierElement:
        return self.entries.get(i, {}).get(j, self.carrier.zero())

    def matrix(self) -> list[list[CarrierElement]]:
        return [[self.entry(i, j) for j in range(DIM)] for i in range(DIM)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.carrier == other.carrier and self.entries == other.entries

    def __hash__(self):
        return hash(self.carrier)

    def is_identity(self) -> bool:
        return self.entries == _identity(self.carrier)

    def is_even_supermatrix(self) -> bool:
        for i, row in self.entries.items():
            for j, v in row.items():
                want = PARITY[i] ^ PARITY[j]
                if v.parity() != want:
                    return False
        return True

    def entries_in_Za(self) -> bool:
        return all(in_Za(c) for row in self.entries.values() for v in row.values()
                   for c in v.terms.values())

    def map_entries(self, f) -> "GroupElement":
        out = {i: {j: f(v) for j, v in r.items()} for i, r in self.entries.items()}
        out = {i: {j: v for j, v in r.items() if v} for i, r in out.items()}
        return GroupElement(self.carrier, {i: r for i, r in out.items() if r}, None)

    def render_word(self) -> str:
        return "; ".join(r.render() for r in self.word or ())

    def __repr__(self) -> str:
        return f"GroupElement({self.render_word() or 'matrix'})"


def _single(rec: GeneratorRecord) -> GroupElement:
    return GroupElement(rec.carrier, rec.matrix(), (rec,))


def x_even(alpha: Root, t: CarrierElement) -> GroupElement:
    return _single(GeneratorRecord("xE", alpha, None, t))


def x_odd(gamma: Root, theta: CarrierElement) -> GroupElement:
    return _single(GeneratorRecord("xO", gamma, None, theta))


def x_root(beta: Root, u: CarrierElement) -> GroupElement:
    return x_even(beta, u) if beta.is_even else x_odd(beta, u)


def h_classical(H: CartanElement, t: CarrierElement) -> GroupElement:
    if not t.constant_term():
        raise GroupError(f"{t.render()} is not a unit")
    return _single(GeneratorRecord("hC", None, H, t))


def h_atype(H: CartanElement, t: CarrierElement) -> GroupElement:
    return _single(GeneratorRecord("hA", None, H, t))


def commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    """``(g, h) = g h g^-1 h^-1``."""
    if g.carrier != h.carrier:
        raise CarrierError("carrier mismatch")
    return g * h * g.inverse() * h.inverse()


def conjugate_by_torus(h: GroupElement, x: GroupElement) -> GroupElement:
    if not h.word or not all(r.is_torus for r in h.word):
        raise GroupError("conjugating element must be a torus word")
    return h * x * h.inverse()


def torus_power(kind: str, t: CarrierElement, z: ScalarA) -> CarrierElement:
    """``t**z`` as used by a torus generator of the given kind."""
    if kind == "hC":
        if not z.is_integer():
            raise GroupError(f"exponent {z} is not an integer")
        return t ** int(z.constant_value())
    return power_za(t, z)


# ---------------------------------------------------------------------------
# commutator formulas


def lemma_a_constants(gamma: Root, alpha: Root) -> dict[int, ScalarA]:
    """``c_s`` with ``(x_gamma(th), x_alpha(t)) = prod_s x_{gamma+s alpha}(c_s t^s th)``."""
    out = {}
    s = 1
    while R.is_root(R.add(gamma.coords, alpha.coords, s)):
        c = -divided_ad_power(alpha, gamma, s)
        if c:
            out[s] = c
        s += 1
    return out


def predicted_lemma_a(gamma: Root, alpha: Root, th: CarrierElement, t: CarrierElement) -> GroupElement:
    g = GroupElement.identity(th.carrier)
    for s, c in lemma_a_constants(gamma, alpha).items():
        g = g * x_odd(Root(R.add(gamma.coords, alpha.coords, s)), (t ** s) * th * c)
    return g


def predicted_lemma_b(gamma: Root, delta: Root, th: CarrierElement, eta: CarrierElement) -> GroupElement:
    """Prediction for ``(x_gamma(th), x_delta(eta))`` with both roots odd."""
    car = th.carrier
    if gamma == -delta:
        return h_atype(coroot(gamma) * sigma(gamma), car.one() - th * eta)
    w = R.add(gamma.coords, delta.coords)
    if R.is_root(w):
        c = structure_constant(gamma, delta)
        return x_even(Root(w), th * eta * (-c))
    return GroupElement.identity(car)


def _odd_key(r: Root) -> tuple:
    return (0 if not r.is_positive else 1, r.coords)


# ---------------------------------------------------------------------------
# big cell factorization


@dataclass
class BigCellFactorization:
    carrier: Carrier
    g0: list[GeneratorRecord]
    oddNeg: list[tuple[Root, CarrierElement]]
    oddPos: list[tuple[Root, CarrierElement]]
    steps: int = 0

    def records(self) -> list[GeneratorRecord]:
        return (list(self.g0) + [GeneratorRecord("xO", r, None, t) for r, t in self.oddNeg]
                + [GeneratorRecord("xO", r, None, t) for r, t in self.oddPos])

    def g0_element(self) -> GroupElement:
        return GroupElement.from_records(self.carrier, self.g0)

    def element(self) -> GroupElement:
        return GroupElement.from_records(self.carrier, self.records())

    def is_ordered(self) -> bool:
        neg = [r for r, _ in self.oddNeg]
        pos = [r for r, _ in self.oddPos]
        return (all(not r.is_positive for r in neg) and all(r.is_positive for r in pos)
                and all(neg[i] < neg[i + 1] for i in range(len(neg) - 1))
                and all(pos[i] < pos[i + 1] for i in range(len(pos) - 1))
                and len(neg) <= 4 and len(pos) <= 4)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "g0": [r.to_json() for r in self.g0],
            "oddNeg": [{"root": r.name(), "param": t.render()} for r, t in self.oddNeg],
            "oddPos": [{"root": r.name(), "param": t.render()} for r, t in self.oddPos],
        }


def _move_odd_past(odd: GeneratorRecord, other: GeneratorRecord) -> list[GeneratorRecord]:
    """Rewrite ``odd * other`` (other even or torus) as ``other * (odd factors)``."""
    gamma, th = odd.root, odd.param
    if other.is_torus:
        # x_g(th) h = h x_g(t^{-g(H)} th)
        z = -pairing(gamma, other.H)
        return [other, GeneratorRecord("xO", gamma, None, torus_power(other.kind, other.param, z) * th)]
    # x_g(th) x_a(t) = x_a(t) prod_s x_{g+s a}((-t)^s d_s th)
    alpha, t = other.root, other.param
    out = [other]
    s = 0
    while R.is_root(R.add(gamma.coords, alpha.coords, s)):
        d = divided_ad_power(alpha, gamma, s)
        if d:
            p = ((-t) ** s) * th * d
            if p:
                out.append(GeneratorRecord("xO", Root(R.add(gamma.coords, alpha.coords, s)), None, p))
        s += 1
    return out


def _swap_odd(left: GeneratorRecord, right: GeneratorRecord) -> list[GeneratorRecord]:
    """``x_g(th) x_d(eta) = (x_g(th), x_d(eta)) x_d(eta) x_g(th)``."""
    gamma, delta, th, eta = left.root, right.root, left.param, right.param
    out = []
    if gamma == -delta:
        out.append(GeneratorRecord("hA", None, coroot(gamma) * sigma(gamma), th.carrier.one() - th * eta))
    else:
        w = R.add(gamma.coords, delta.coords)
        if R.is_root(w):
            out.append(GeneratorRecord("xE", Root(w), None, th * eta * (-structure_constant(gamma, delta))))
    return [r for r in out if not r.is_trivial()] + [right, left]


def factorize_big_cell(g: GroupElement | Sequence[GeneratorRecord], verify: bool = True,
                       max_steps: int = 100_000) -> BigCellFactorization:
    """Rewrite a generator word into ``G0 * (ordered odd negative) * (ordered odd positive)``."""
    if isinstance(g, GroupElement):
        if g.word is None:
            raise GroupError("factorization needs the generator word")
        word, car = list(g.word), g.carrier
    else:
        word = list(g)
        if not word:
            raise GroupError("empty word without a carrier; pass a GroupElement")
        car = word[0].carrier
    word = [r for r in word if not r.is_trivial()]
    steps = 0
    while True:
        steps += 1
        if steps > max_steps:
            raise GroupError("factorization did not terminate")
        changed = False
        for i in range(len(word) - 1):
            L, Rr = word[i], word[i + 1]
            if L.is_odd and not Rr.is_odd:
                rep = _move_odd_past(L, Rr)
            elif L.is_odd and Rr.is_odd and L.root == Rr.root:
                rep = [GeneratorRecord("xO", L.root, None, L.param + Rr.param)]
            elif L.is_odd and Rr.is_odd and _odd_key(L.root) > _odd_key(Rr.root):
                rep = _swap_odd(L, Rr)
            else:
                continue
            word[i:i + 2] = [r for r in rep if not r.is_trivial()]
            changed = True
            break
        if not changed:
            break
    k = 0
    while k < len(word) and not word[k].is_odd:
        k += 1
    odd = word[k:]
    fac = BigCellFactorization(
        car, word[:k],
        [(r.root, r.param) for r in odd if not r.root.is_positive],
        [(r.root, r.param) for r in odd if r.root.is_positive],
        steps,
    )
    if verify:
        orig = g if isinstance(g, GroupElement) else GroupElement.from_records(car, g)
        if fac.element() != orig:
            raise GroupError("factorization changed the matrix")
        if not fac.is_ordered():
            raise GroupError("odd factors are not ordered")
    return fac


# ---------------------------------------------------------------------------
# verification suites


def _sample_params(car: Carrier):
    x = car.xi
    th, eta = x(1), x(2)
    t_even = car.scalar(2) + x(3) * x(4) if car.odd >= 4 else car.scalar(2)
    return th, eta, t_even


def check_lemma_a(car: Carrier | None = None) -> Report:
    car = car or Carrier.grassmann(4)
    rep = Report("lemma-a")
    th, _, t = _sample_params(car)
    for gamma in R.all_roots():
        if not gamma.is_odd:
            continue
        for alpha in R.all_roots():
            if not alpha.is_even:
                continue
            lhs = commutator(x_odd(gamma, th), x_even(alpha, t))
            rhs = predicted_lemma_a(gamma, alpha, th, t)
            for s, c in lemma_a_constants(gamma, alpha).items():
                rep.check(c.is_integer(), f"c_{s} = {c} for ({gamma}, {alpha}) is not an integer")
            rep.check(lhs == rhs, f"(a) fails for gamma={gamma}, alpha={alpha}")
    return rep


def check_lemma_b(car: Carrier | None = None) -> Report:
    car = car or Carrier.grassmann(4)
    rep = Report("lemma-b")
    th, eta, _ = _sample_params(car)
    for gamma in R.all_roots():
        for delta in R.all_roots():
            if gamma.is_odd and delta.is_odd:
                lhs = commutator(x_odd(gamma, th), x_odd(delta, eta))
                rhs = predicted_lemma_b(gamma, delta, th, eta)
                rep.check(lhs == rhs, f"(b) fails for gamma={gamma}, delta={delta}")
    return rep


def torus_generators() -> list[tuple[str, CartanElement]]:
    gens = [("hC", coroot(r)) for r in R.even_positive()]
    gens += [("hA", CartanElement.basis(i)) for i in (1, 2, 3)]
    return gens


def check_lemma_c(car: Carrier | None = None) -> Report:
    car = car or Carrier.grassmann(4)
    rep = Report("lemma-c")
    x = car.xi
    t_classical = car.scalar(2) + x(1) * x(2)
    t_atype = car.one() + x(1) * x(2)
    for kind, H in torus_generators():
        t = t_classical if kind == "hC" else t_atype
        h = _single(GeneratorRecord(kind, None, H, t))
        for beta in R.all_roots():
            u = x(3) if beta.is_odd else car.scalar(3) + x(3) * x(4)
            lhs = conjugate_by_torus(h, x_root(beta, u))
            rhs = x_root(beta, torus_power(kind, t, pairing(beta, H)) * u)
            rep.check(lhs == rhs, f"(c) fails for {kind}({_cartan_text(H)}), beta={beta}")
    return rep


def check_torus_identities(car: Carrier | None = None) -> Report:
    """``h_{H_{2e_i}}(t)`` equals the product of a-type factors along its H-coordinates."""
    car = car or Carrier.grassmann(4)
    rep = Report("torus-identities")
    x = car.xi
    samples = [car.one() + x(1) * x(2), car.one() + x(1) * x(2) - x(3) * x(4) * 3]
    for r in R.even_positive():
        H = coroot(r)
        for t in samples:
            lhs = h_classical(H, t)
            rhs = GroupElement.identity(car)
            for i, z in enumerate(H.coords):
                if z:
                    rhs = rhs * h_atype(CartanElement.basis(i + 1) * z, t)
            rep.check(lhs == rhs, f"torus identity fails for H_{r} at t = {t.render()}")
            rep.check(h_atype(H, t) == lhs, f"h_atype and h_classical differ for H_{r}")
    return rep


def check_lemmas(odd_vars: int = 4) -> list[Report]:
    car = Carrier.grassmann(odd_vars)
    if odd_vars < 4:
        raise CarrierError("the commutator suites need at least 4 odd generators")
    return [check_lemma_a(car), check_lemma_b(car), check_lemma_c(car), check_torus_identities(car)]


def random_odd(car: Carrier, rng: random.Random, terms: int = 2) -> CarrierElement:
    out = car.zero()
    for _ in range(rng.randint(1, terms)):
        out = out + car.xi(rng.randint(1, car.odd)) * rng.choice([1, -1, 2])
    return out if out else car.xi(1)


def random_even_nilpotent(car: Carrier, rng: random.Random) -> CarrierElement:
    i, j = rng.sample(range(1, car.odd + 1), 2)
    return car.xi(i) * car.xi(j) * rng.choice([1, -1, 2])


def random_record(car: Carrier, rng: random.Random) -> GeneratorRecord:
    kind = rng.choice(["xE", "xO", "xO", "xO", "hC", "hA"])
    if kind == "xE":
        t = car.scalar(rng.choice([0, 1, -1, 2])) + random_even_nilpotent(car, rng)
        return GeneratorRecord("xE", rng.choice(R.all_roots()[:6]), None, t)
    if kind == "xO":
        return GeneratorRecord("xO", rng.choice(R.all_roots()[6:]), None, random_odd(car, rng))
    if kind == "hC":
        H = coroot(rng.choice(R.even_positive()))
        return GeneratorRecord("hC", None, H, car.scalar(rng.choice([1, -1, 2])) + random_even_nilpotent(car, rng))
    H = CartanElement.basis(rng.randint(1, 3))
    return GeneratorRecord("hA", None, H, car.one() + random_even_nilpotent(car, rng))


def random_group_word(car: Carrier, rng: random.Random, max_len: int = 8) -> list[GeneratorRecord]:
    return [random_record(car, rng) for _ in range(rng.randint(1, max_len))]


def check_semidirect(car: Carrier | None = None, seed: int = 0, samples: int = 20) -> Report:
    """Checks for carriers with ``A_1^2 = 0``."""
    car = car or Carrier.square_zero(8)
    if not car.square_zero_odd:
        raise CarrierError("check_semidirect needs a carrier with A_1^2 = 0")
    rng = random.Random(seed)
    rep = Report("semidirect")
    odd_roots = [r for r in R.all_roots() if r.is_odd]
    # products of two odd elements vanish
    for i in range(1, car.odd + 1):
        for j in range(1, car.odd + 1):
            rep.check((car.xi(i) * car.xi(j)).is_zero(), f"x{i}*x{j} != 0")
    # odd one-parameter factors commute
    for gamma in odd_roots:
        for delta in odd_roots:
            th, eta = random_odd(car, rng), random_odd(car, rng)
            g, h = x_odd(gamma, th), x_odd(delta, eta)
            rep.check(g * h == h * g, f"x_{gamma} and x_{delta} do not commute")
    # normality: conjugates of odd factors by G0 generators stay in G1
    for _ in range(samples):
        gamma = rng.choice(odd_roots)
        th = random_odd(car, rng)
        if rng.random() < 0.5:
            alpha = rng.choice(R.all_roots()[:6])
            t = car.scalar(rng.choice([1, -1, 2, 3]))
            conj = x_even(alpha, t) * x_odd(gamma, th) * x_even(alpha, -t)
            pred = GroupElement.identity(car)
            # x_a(t) x_g(th) x_a(-t) = prod_s x_{g+s a}(t^s d_s th)
            s = 0
            while R.is_root(R.add(gamma.coords, alpha.coords, s)):
                d = divided_ad_power(alpha, gamma, s)
                if d:
                    pred = pred * x_odd(Root(R.add(gamma.coords, alpha.coords, s)), (t ** s) * th * d)
                s += 1
            rep.check(conj == pred, f"x_{alpha} conjugate of x_{gamma} leaves G1")
        else:
            H = coroot(rng.choice(R.even_positive()))
            t = car.scalar(rng.choice([-1, 2, 3]))
            h = h_classical(H, t)
            conj = conjugate_by_torus(h, x_odd(gamma, th))
            pred = x_odd(gamma, (t ** int(pairing(gamma, H).constant_value())) * th)
            rep.check(conj == pred, f"torus conjugate of x_{gamma} leaves G1")
    # coordinates are recoverable from the matrix
    for sign in (False, True):
        roots = [r for r in odd_roots if r.is_positive == sign]
        for _ in range(samples):
            params = {r: random_odd(car, rng, 3) for r in roots}
            g = GroupElement.identity(car)
            for r in roots:
                g = g * x_odd(r, params[r])
            got = recover_odd_coordinates(g, roots)
            rep.check(got == params, "odd coordinates not recovered")
    return rep


@lru_cache(maxsize=None)
def _recovery_entry(gamma: Root) -> tuple[int, int, ScalarA]:
    """An entry ``(i, j)`` of the operator of ``th X_gamma`` with a unit coefficient."""
    idx = ROOT_INDEX[gamma.coords]
    best = None
    for i, row in adjoint_sparse(idx).items():
        for j, c in row.items():
            v = -c if PARITY[j] else c
            if v.is_constant() and abs(v.constant_value()) == 1:
                return i, j, v
            if best is None and v.is_unit():
                best = (i, j, v)
    if best is None:
        raise GroupError(f"no unit entry in ad(X_{gamma})")
    return best


def recover_odd_coordinates(g: GroupElement, roots: Sequence[Root]) -> dict[Root, CarrierElement]:
    """Read ``th_gamma`` off ``prod x_gamma(th_gamma)`` (valid when ``A_1^2 = 0``)."""
    out = {}
    for r in roots:
        i, j, v = _recovery_entry(r)
        out[r] = g.entry(i, j) * (ONE / v)
    return out


# ---------------------------------------------------------------------------
# Lie functor


def basis_exponential(idx: int, eps: CarrierElement, theta: CarrierElement | None = None) -> GroupElement:
    """A group element ``1 + eps*(operator of b_idx)``, realized through generators."""
    b = BASIS[idx]
    if b.cartan is not None:
        return h_atype(CartanElement.basis(b.cartan), eps.carrier.one() + eps)
    if b.root.is_even:
        return x_even(b.root, eps)
    if theta is None:
        raise GroupError("odd basis vectors need an auxiliary odd parameter")
    return x_odd(b.root, eps * theta)


def operator_of(vec: SuperVector, coeff: CarrierElement) -> Sparse:
    """Matrix of ``coeff * vec`` on V(A) for homogeneous ``vec``."""
    car = coeff.carrier
    out: Sparse = {}
    for k, c in vec.coords.items():
        out = _mat_add(out, _operator(car, coeff * c, k))
    return out


@dataclass
class LieReport(Report):
    even_dim: int = 0
    odd_dim: int = 0


def lie_functor_check(pairs: Iterable[tuple[int, int]] | None = None) -> LieReport:
    rep = LieReport("lie-functor")
    table = build_structure_table()
    rep.even_dim = sum(1 for p in PARITY if p == 0)
    rep.odd_dim = sum(1 for p in PARITY if p == 1)
    rep.check((rep.even_dim, rep.odd_dim) == (9, 8), f"dimension {rep.even_dim}|{rep.odd_dim}")

    # kernel of G(p): one dual, one auxiliary odd generator
    car1 = Carrier.dual_odd(1, 1)
    eps, th = car1.eps(1), car1.xi(1)
    base = car1.without_dual(1)
    for idx in range(DIM):
        g = basis_exponential(idx, eps, th)
        coeff = eps * th if PARITY[idx] else eps
        want = _mat_add(_identity(car1), operator_of(SuperVector.basis(idx), coeff))
        rep.check(g.entries == want, f"exponential of {BASIS[idx]} is not 1 + eps*ad")
        pg = g.map_entries(lambda v: p_map(v, 1))
        rep.check(pg.entries == _identity(base), f"p-image of exp({BASIS[idx]}) is not 1")

    # brackets from commutators over two duals
    car = Carrier.dual_odd(2, 2)
    e1, e2, t1, t2 = car.eps(1), car.eps(2), car.xi(1), car.xi(2)
    ident = _identity(car)
    if pairs is None:
        pairs = [(i, j) for i in range(DIM) for j in range(DIM)]
    count = 0
    for i, j in pairs:
        count += 1
        g = basis_exponential(i, e1, t1)
        h = basis_exponential(j, e2, t2)
        lhs = commutator(g, h)
        cx = t1 if PARITY[i] else car.one()
        cy = t2 if PARITY[j] else car.one()
        coeff = e1 * e2 * cx * cy * (-1 if PARITY[i] and PARITY[j] else 1)
        want = _mat_add(ident, operator_of(table.bracket_basis(i, j), coeff))
        rep.check(lhs.entries == want, f"commutator for ({BASIS[i]}, {BASIS[j]}) != 1 + e1 e2 ad[x, y]")
    rep.entries = count
    return rep
