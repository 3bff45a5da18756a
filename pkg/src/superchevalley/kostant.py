"""Kostant's Z_a-form of U(g): PBW monomials and a straightening engine.

A word is a tuple of letters ``(slot, n)``.  Slots enumerate the PBW
generators in the fixed total order

    odd negative < even negative < H1, H2, H3 < even positive < odd positive

(each block sorted by root).  ``n`` is the divided-power exponent for an
even root vector, the binomial degree for a Cartan slot, and 1 for an odd
root vector.  A word is in normal form iff its slots strictly increase.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

from . import roots as R
from .roots import CartanElement, Root, coroot, pairing, root_string
from .scalars import (
    ONE, ZERO, ScalarA, as_scalar, binom_poly, binomial, in_Za, join_terms, render_term,
    to_binomial_basis,
)
from .superalgebra import (
    DIM, ROOT_INDEX, BASIS, Matrix, adjoint_matrix, build_structure_table, identity_matrix,
    mat_mul, weight_of,
)

Letter = tuple[int, int]
Word = tuple[Letter, ...]


class StraighteningError(RuntimeError):
    pass


class IntegralityError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# slots


def _slot_roots() -> tuple[Root | None, ...]:
    odd_neg = sorted(R.odd_negative())
    even_neg = sorted(R.even_negative())
    even_pos = sorted(R.even_positive())
    odd_pos = sorted(R.odd_positive())
    return tuple(odd_neg + even_neg + [None, None, None] + even_pos + odd_pos)


SLOT_ROOT: tuple[Root | None, ...] = _slot_roots()
N_SLOTS = len(SLOT_ROOT)
CARTAN_SLOTS = (7, 8, 9)
SLOT_OF_ROOT: dict[tuple[int, int, int], int] = {
    r.coords: s for s, r in enumerate(SLOT_ROOT) if r is not None
}


def cartan_slot(i: int) -> int:
    """Slot of ``binom(H_i, .)`` for ``i`` in 1..3."""
    return CARTAN_SLOTS[i - 1]


def slot_kind(s: int) -> str:
    if s in CARTAN_SLOTS:
        return "cartan"
    return "even" if SLOT_ROOT[s].is_even else "odd"


def _is_cartan(s: int) -> bool:
    return 7 <= s <= 9


# ---------------------------------------------------------------------------
# atoms and words


@dataclass(frozen=True)
class DividedPower:
    root: Root
    n: int

    def __post_init__(self):
        if not self.root.is_even:
            raise ValueError("divided powers are taken of even root vectors only")
        if self.n < 0:
            raise ValueError("exponent must be non-negative")


@dataclass(frozen=True)
class OddVector:
    root: Root

    def __post_init__(self):
        if not self.root.is_odd:
            raise ValueError(f"{self.root} is not an odd root")


@dataclass(frozen=True)
class CartanBinomial:
    H: CartanElement
    n: int

    def __post_init__(self):
        if not self.H.in_h_Za():
            raise ValueError("binom(H, n) needs H with Z[a]-coordinates")
        if self.n < 0:
            raise ValueError("degree must be non-negative")


Atom = Union[DividedPower, OddVector, CartanBinomial]


@dataclass(frozen=True)
class GeneratorWord:
    factors: tuple[Atom, ...]

    def __init__(self, factors: Iterable[Atom] = ()):
        object.__setattr__(self, "factors", tuple(factors))

    def __len__(self) -> int:
        return len(self.factors)


class PBWMonomial(tuple):
    """An ordered PBW monomial, stored as its tuple of letters."""

    def _block(self, lo: int, hi: int) -> tuple[Letter, ...]:
        return tuple(l for l in self if lo <= l[0] < hi)

    @property
    def oddNeg(self) -> tuple[Root, ...]:
        return tuple(SLOT_ROOT[s] for s, _ in self._block(0, 4))

    @property
    def evenNeg(self) -> dict[Root, int]:
        return {SLOT_ROOT[s]: n for s, n in self._block(4, 7)}

    @property
    def cartan(self) -> tuple[int, int, int]:
        degs = dict(self._block(7, 10))
        return tuple(degs.get(s, 0) for s in CARTAN_SLOTS)

    @property
    def evenPos(self) -> dict[Root, int]:
        return {SLOT_ROOT[s]: n for s, n in self._block(10, 13)}

    @property
    def oddPos(self) -> tuple[Root, ...]:
        return tuple(SLOT_ROOT[s] for s, _ in self._block(13, 17))

    def render(self) -> str:
        return render_word(self)


def is_normal(word: Sequence[Letter]) -> bool:
    return all(word[i][0] < word[i + 1][0] for i in range(len(word) - 1))


def render_letter(letter: Letter) -> str:
    s, n = letter
    if _is_cartan(s):
        i = CARTAN_SLOTS.index(s) + 1
        return f"H{i}" if n == 1 else f"binom(H{i},{n})"
    r = SLOT_ROOT[s]
    name = f"E({r.name()})" if r.is_positive else f"F({(-r).name()})"
    return name if n == 1 else f"{name}^({n})"


def render_word(word: Sequence[Letter]) -> str:
    return "*".join(render_letter(l) for l in word) if word else "1"


class PBWElement:
    """Finite combination of PBW monomials with ScalarA coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[Letter], ScalarA] | None = None):
        out: dict[PBWMonomial, ScalarA] = {}
        for w, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                key = PBWMonomial(tuple(w))
                out[key] = out.get(key, ZERO) + c
        self.terms = {w: c for w, c in out.items() if c}

    @classmethod
    def one(cls) -> "PBWElement":
        return cls({(): ONE})

    @classmethod
    def letter(cls, slot: int, n: int = 1) -> "PBWElement":
        return cls({((slot, n),): ONE}) if n else cls.one()

    def __add__(self, other: "PBWElement") -> "PBWElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return PBWElement(out)

    def __neg__(self) -> "PBWElement":
        return PBWElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        return self + (-other)

    def scale(self, s) -> "PBWElement":
        s = as_scalar(s)
        return PBWElement({w: c * s for w, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_normal(self) -> bool:
        return all(is_normal(w) for w in self.terms)

    def coefficients(self) -> Iterator[ScalarA]:
        return iter(self.terms.values())

    def render(self) -> str:
        order = sorted(self.terms, key=lambda m: (len(m), tuple(m)))
        return join_terms([render_term(self.terms[w], render_word(w) if w else "") for w in order])

    def __repr__(self) -> str:
        return f"PBWElement({self.render()})"


# ---------------------------------------------------------------------------
# Cartan binomials


MultiPoly = dict[tuple[int, int, int], ScalarA]


def _mp_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    out: MultiPoly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            out[e] = out.get(e, ZERO) + c1 * c2
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _stirling2(k: int, j: int) -> int:
    if k == j:
        return 1
    if j == 0 or j > k:
        return 0
    return j * _stirling2(k - 1, j) + _stirling2(k - 1, j - 1)


def _power_to_binomials(k: int) -> dict[int, int]:
    """``x**k = sum_j j! S(k, j) binom(x, j)``."""
    return {j: math.factorial(j) * _stirling2(k, j) for j in range(k + 1) if _stirling2(k, j)}


@lru_cache(maxsize=4096)
def _expand_cached(H: CartanElement, shift: ScalarA, n: int) -> tuple:
    lin: MultiPoly = {}
    for i, z in enumerate(H.coords):
        if z:
            e = [0, 0, 0]
            e[i] = 1
            lin[tuple(e)] = z
    prod: MultiPoly = {(0, 0, 0): ONE}
    for k in range(n):
        factor = dict(lin)
        c = -(shift + k)
        if c:
            factor[(0, 0, 0)] = factor.get((0, 0, 0), ZERO) + c
        factor = {e: v for e, v in factor.items() if v}
        prod = _mp_mul(prod, factor)
    inv = as_scalar(1) * math.factorial(n)
    out: dict[tuple[int, int, int], ScalarA] = {}
    for (p1, p2, p3), c in prod.items():
        c = c / inv
        for j1, b1 in _power_to_binomials(p1).items():
            for j2, b2 in _power_to_binomials(p2).items():
                for j3, b3 in _power_to_binomials(p3).items():
                    key = (j1, j2, j3)
                    out[key] = out.get(key, ZERO) + c * (b1 * b2 * b3)
    out = {k: v for k, v in out.items() if v}
    for k, v in out.items():
        if not in_Za(v):
            raise IntegralityError(f"binom(H - {shift}, {n}) has coefficient {v} outside Z_a at {k}")
    return tuple(sorted(out.items()))


def expand_shifted_binomial(H: CartanElement, shift, n: int) -> dict[tuple[int, int, int], ScalarA]:
    """``binom(H - shift, n)`` as ``{(n1, n2, n3): c}`` over products of ``binom(H_i, n_i)``."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if not H.in_h_Za():
        raise ValueError("H must have Z[a]-coordinates")
    return dict(_expand_cached(H, as_scalar(shift), n))


def _cartan_word(degs: tuple[int, int, int]) -> Word:
    return tuple((s, d) for s, d in zip(CARTAN_SLOTS, degs) if d)


def binomial_element(H: CartanElement, n: int, shift=0) -> PBWElement:
    return PBWElement({_cartan_word(k): c for k, c in expand_shifted_binomial(H, shift, n).items()})


@lru_cache(maxsize=None)
def _binomial_product(n: int, m: int) -> tuple[tuple[int, ScalarA], ...]:
    """``binom(x, n) binom(x, m) = sum_k c_k binom(x, k)``."""
    exp = to_binomial_basis(binom_poly(n) * binom_poly(m))
    return tuple((k, ScalarA(c)) for k, c in enumerate(exp.coeffs) if c)


# ---------------------------------------------------------------------------
# the rewriting rules


@lru_cache(maxsize=None)
def _table():
    return build_structure_table()


def _bracket_roots(b: Root, d: Root) -> dict[int, ScalarA]:
    """Coordinates of ``[X_b, X_d]`` keyed by basis index."""
    return _table().entries[(ROOT_INDEX[b.coords], ROOT_INDEX[d.coords])]


def _vector_to_letters(vec: Mapping[int, ScalarA]) -> list[tuple[ScalarA, Word]]:
    out = []
    for k, c in vec.items():
        if k < 3:
            out.append((c, ((CARTAN_SLOTS[k], 1),)))
        else:
            out.append((c, ((SLOT_OF_ROOT[BASIS[k].root.coords], 1),)))
    return out


@lru_cache(maxsize=None)
def divided_ad_power(alpha: Root, gamma: Root, k: int) -> ScalarA:
    """Coefficient of ``X_{gamma+k alpha}`` in ``(ad X_alpha)^(k) X_gamma`` (0 if not a root)."""
    vec = {ROOT_INDEX[gamma.coords]: ONE}
    t = _table()
    ia = ROOT_INDEX[alpha.coords]
    for step in range(1, k + 1):
        nxt: dict[int, ScalarA] = {}
        for j, c in vec.items():
            for m, v in t.entries[(ia, j)].items():
                nxt[m] = nxt.get(m, ZERO) + c * v
        vec = {m: c * ScalarA(1) / step for m, c in nxt.items() if c}
        if not vec:
            return ZERO
    w = R.add(gamma.coords, alpha.coords, k)
    if not R.is_root(w):
        return ZERO
    return vec.get(ROOT_INDEX[w], ZERO)


def epsilon_signs(alpha: Root, gamma: Root) -> list[int]:
    """Signs with ``[X_alpha, X_{gamma+(s-1)alpha}] = eps_s (r+s) X_{gamma+s alpha}``."""
    r = root_string(gamma, alpha).r
    q = root_string(gamma, alpha).q
    out = []
    t = _table()
    for s in range(1, q + 1):
        src = R.add(gamma.coords, alpha.coords, s - 1)
        dst = R.add(gamma.coords, alpha.coords, s)
        c = t.entries[(ROOT_INDEX[alpha.coords], ROOT_INDEX[src])].get(ROOT_INDEX[dst], ZERO)
        if c == r + s:
            out.append(1)
        elif c == -(r + s):
            out.append(-1)
        else:
            raise StraighteningError(f"[X_{alpha}, X_{Root(src)}] = {c}, not +-{r + s}")
    return out


def r5_coefficient(alpha: Root, gamma: Root, k: int) -> ScalarA:
    """``(prod eps_s) binom(r+k, k)``, the coefficient of ``X_{gamma+k alpha}``."""
    if k == 0:
        return ONE
    eps = epsilon_signs(alpha, gamma)
    if k > len(eps):
        return ZERO
    r = root_string(gamma, alpha).r
    return ScalarA(math.prod(eps[:k]) * math.comb(r + k, k))


def _shift_cartan(i: int, n: int, c: ScalarA) -> list[tuple[ScalarA, Word]]:
    """``binom(H_i + c, n) = sum_j binom(c, j) binom(H_i, n - j)``."""
    out = []
    for j in range(n + 1):
        b = binomial(c, j)
        if b:
            out.append((as_scalar(b), ((CARTAN_SLOTS[i], n - j),) if n - j else ()))
    return out


def _rewrite_pair(x: Letter, y: Letter) -> list[tuple[ScalarA, Word]]:
    """Rewrite the adjacent pair ``x y`` (with ``slot(x) >= slot(y)``)."""
    s, n = x
    t, m = y
    if s == t:
        if _is_cartan(s):
            return [(c, ((s, k),) if k else ()) for k, c in _binomial_product(n, m)]
        if SLOT_ROOT[s].is_odd:
            return []
        return [(ScalarA(math.comb(n + m, m)), ((s, n + m),))]
    xc, yc = _is_cartan(s), _is_cartan(t)
    if xc and yc:
        return [(ONE, (y, x))]
    if xc:
        # binom(H, n) Y^(m) = Y^(m) binom(H + m beta(H), n)
        i = CARTAN_SLOTS.index(s)
        c = pairing(SLOT_ROOT[t], CartanElement.basis(i + 1)) * m
        return [(k, (y,) + w) for k, w in _shift_cartan(i, n, c)]
    if yc:
        # X^(n) binom(H, m) = binom(H - n beta(H), m) X^(n)
        i = CARTAN_SLOTS.index(t)
        c = -pairing(SLOT_ROOT[s], CartanElement.basis(i + 1)) * n
        return [(k, w + (x,)) for k, w in _shift_cartan(i, m, c)]
    b, d = SLOT_ROOT[s], SLOT_ROOT[t]
    if b.is_odd and d.is_odd:
        out = [(-ONE, (y, x))]
        out.extend(_vector_to_letters(_bracket_roots(b, d)))
        return out
    if b.is_even and d.is_odd:
        # X_b^(n) X_d = sum_k ((ad X_b)^(k) X_d) X_b^(n-k)
        out = []
        for k in range(n + 1):
            c = divided_ad_power(b, d, k)
            if c:
                g = SLOT_OF_ROOT[R.add(d.coords, b.coords, k)]
                out.append((c, ((g, 1),) + (((s, n - k),) if n - k else ())))
        return out
    if b.is_odd and d.is_even:
        # X_b X_d^(m) = sum_k (-1)^k X_d^(m-k) ((ad X_d)^(k) X_b)
        out = []
        for k in range(m + 1):
            c = divided_ad_power(d, b, k)
            if c:
                g = SLOT_OF_ROOT[R.add(b.coords, d.coords, k)]
                out.append((c * (-1) ** k, (((t, m - k),) if m - k else ()) + ((g, 1),)))
        return out
    # both even
    if b != -d:
        if _bracket_roots(b, d):
            raise StraighteningError(f"[X_{b}, X_{d}] is nonzero; even roots do not commute")
        return [(ONE, (y, x))]
    # X_b^(n) X_{-b}^(m) = sum_k X_{-b}^(m-k) binom(H_b - m - n + 2k, k) X_b^(n-k)
    Hb = coroot(b)
    out = []
    for k in range(min(n, m) + 1):
        left = ((t, m - k),) if m - k else ()
        right = ((s, n - k),) if n - k else ()
        for degs, c in expand_shifted_binomial(Hb, m + n - 2 * k, k).items():
            out.append((c, left + _cartan_word(degs) + right))
    return out


def _find_pair(word: Word, strategy: str) -> int | None:
    idx = range(len(word) - 1)
    if strategy == "rightmost":
        idx = reversed(idx)
    for i in idx:
        if word[i][0] >= word[i + 1][0]:
            return i
    return None


STRATEGIES = ("leftmost", "rightmost")


def _normal_form(word: Word, strategy: str) -> dict[Word, ScalarA]:
    cache = _CACHES[strategy]
    hit = cache.get(word)
    if hit is not None:
        return hit
    i = _find_pair(word, strategy)
    if i is None:
        out = {word: ONE}
    else:
        out: dict[Word, ScalarA] = {}
        pre, post = word[:i], word[i + 2:]
        for c, rep in _rewrite_pair(word[i], word[i + 1]):
            for w, v in _normal_form(pre + rep + post, strategy).items():
                out[w] = out.get(w, ZERO) + c * v
        out = {w: v for w, v in out.items() if v}
    if len(cache) < _CACHE_LIMIT:
        cache[word] = out
    return out


_CACHE_LIMIT = 200_000
_CACHES: dict[str, dict[Word, dict[Word, ScalarA]]] = {s: {} for s in STRATEGIES}


def clear_caches() -> None:
    for c in _CACHES.values():
        c.clear()


def atom_element(atom: Atom) -> PBWElement:
    if isinstance(atom, DividedPower):
        return PBWElement.letter(SLOT_OF_ROOT[atom.root.coords], atom.n)
    if isinstance(atom, OddVector):
        return PBWElement.letter(SLOT_OF_ROOT[atom.root.coords])
    if isinstance(atom, CartanBinomial):
        return binomial_element(atom.H, atom.n)
    raise TypeError(f"not a Kostant generator: {atom!r}")


def _raw_words(word: GeneratorWord) -> dict[Word, ScalarA]:
    """Concatenate the atoms' expansions without reordering."""
    acc: dict[Word, ScalarA] = {(): ONE}
    for atom in word.factors:
        e = atom_element(atom)
        nxt: dict[Word, ScalarA] = {}
        for w1, c1 in acc.items():
            for w2, c2 in e.terms.items():
                w = w1 + tuple(w2)
                nxt[w] = nxt.get(w, ZERO) + c1 * c2
        acc = {w: c for w, c in nxt.items() if c}
    return acc


def normal_form(elem: Mapping[Sequence[Letter], ScalarA] | PBWElement,
                strategy: str = "leftmost") -> PBWElement:
    """Straighten an arbitrary combination of (possibly unordered) words."""
    if strategy not in _CACHES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    terms = elem.terms if isinstance(elem, PBWElement) else elem
    out: dict[Word, ScalarA] = {}
    for w, c in terms.items():
        for v, d in _normal_form(tuple(w), strategy).items():
            out[v] = out.get(v, ZERO) + c * d
    return PBWElement(out)


def straighten(w: GeneratorWord, strategy: str = "leftmost") -> PBWElement:
    return normal_form(_raw_words(w), strategy)


def multiply(x: PBWElement, y: PBWElement, strategy: str = "leftmost") -> PBWElement:
    raw: dict[Word, ScalarA] = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            w = tuple(w1) + tuple(w2)
            raw[w] = raw.get(w, ZERO) + c1 * c2
    return normal_form(raw, strategy)


def certify_integrality(e: PBWElement) -> list[ScalarA]:
    """Coefficients of ``e`` that fail ``in_Za`` (empty when certified)."""
    return [c for c in e.terms.values() if not in_Za(c)]


def tensor_shape(e: PBWElement) -> dict[PBWMonomial, tuple[Word, tuple[Root, ...]]]:
    """Split each normal monomial into (even part, ordered odd subset)."""
    out = {}
    for w in e.terms:
        if not is_normal(w):
            raise StraighteningError(f"{render_word(w)} is not in normal form")
        even = tuple(l for l in w if slot_kind(l[0]) != "odd")
        odd = tuple(SLOT_ROOT[s] for s, _ in w if slot_kind(s) == "odd")
        out[w] = (even, odd)
    return out


# ---------------------------------------------------------------------------
# action on the adjoint module


@lru_cache(maxsize=None)
def _letter_matrix(letter: Letter) -> tuple[tuple[ScalarA, ...], ...]:
    s, n = letter
    if _is_cartan(s):
        H = CartanElement.basis(CARTAN_SLOTS.index(s) + 1)
        M = [[ZERO] * DIM for _ in range(DIM)]
        for j in range(DIM):
            M[j][j] = as_scalar(binomial(pairing(weight_of(j), H), n))
        return tuple(map(tuple, M))
    ad = adjoint_matrix(ROOT_INDEX[SLOT_ROOT[s].coords])
    M = identity_matrix()
    for _ in range(n):
        M = mat_mul(M, ad)
    inv = ScalarA(1) / math.factorial(n)
    return tuple(tuple(c * inv for c in row) for row in M)


def letter_matrix(letter: Letter) -> Matrix:
    return [list(r) for r in _letter_matrix(letter)]


def _word_matrix(word: Sequence[Letter]) -> Matrix:
    M = identity_matrix()
    for l in word:
        M = mat_mul(M, letter_matrix(l))
    return M


def atom_matrix(atom: Atom) -> Matrix:
    if isinstance(atom, CartanBinomial):
        M = [[ZERO] * DIM for _ in range(DIM)]
        for j in range(DIM):
            M[j][j] = as_scalar(binomial(pairing(weight_of(j), atom.H), atom.n))
        return M
    return act_on_adjoint(atom_element(atom), check=False)


def act_on_adjoint(e: PBWElement, check: bool = True) -> Matrix:
    """The matrix of ``e`` on the adjoint module in the Chevalley basis."""
    M = [[ZERO] * DIM for _ in range(DIM)]
    for w, c in e.terms.items():
        W = _word_matrix(w)
        for i in range(DIM):
            for j in range(DIM):
                if W[i][j]:
                    M[i][j] = M[i][j] + c * W[i][j]
    if check:
        for i in range(DIM):
            for j in range(DIM):
                if not in_Za(M[i][j]):
                    raise IntegralityError(f"entry ({i},{j}) = {M[i][j]} is outside Z_a")
    return M


def word_matrix(w: GeneratorWord) -> Matrix:
    M = identity_matrix()
    for atom in w.factors:
        M = mat_mul(M, atom_matrix(atom))
    return M


# ---------------------------------------------------------------------------
# random words (for tests and the CLI)


def kostant_generators(max_power: int = 3, max_degree: int = 2) -> list[Atom]:
    gens: list[Atom] = []
    for r in R.all_roots():
        if r.is_even:
            gens += [DividedPower(r, n) for n in range(1, max_power + 1)]
        else:
            gens.append(OddVector(r))
    for i in (1, 2, 3):
        gens += [CartanBinomial(CartanElement.basis(i), n) for n in range(1, max_degree + 1)]
    return gens


def random_word(rng: random.Random, max_len: int = 6, max_power: int = 2,
                max_degree: int = 2) -> GeneratorWord:
    gens = kostant_generators(max_power, max_degree)
    # a few Cartan binomials in non-basis coroot directions
    gens += [CartanBinomial(coroot(r), 1) for r in R.all_roots()[:7]]
    k = rng.randint(0, max_len)
    return GeneratorWord(rng.choice(gens) for _ in range(k))
