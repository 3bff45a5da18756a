"""Root data of D(2,1;a) in epsilon coordinates.

A root ``(c1, c2, c3)`` stands for ``c1*e1 + c2*e2 + c3*e3``.  Simple roots
are ``a1 = e1 - e2 - e3``, ``a2 = 2e2``, ``a3 = 2e3``.  Cartan elements are
triples of scalars in the Chevalley basis ``H1, H2, H3`` where ``H1 = h1``,
``H2 = (2h1 - h2 - a*h3)/(1+a)`` and ``H3 = h3``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .scalars import A, ONE, ONE_PLUS_A, ZERO, ScalarA, as_scalar, in_Z_bracket_a

Weight = tuple[int, int, int]


class RootError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Root:
    coords: Weight

    def __post_init__(self):
        if self.coords not in _ROOT_SET:
            raise RootError(f"{self.coords} is not a root of D(2,1;a)")

    @property
    def is_even(self) -> bool:
        return any(abs(c) == 2 for c in self.coords)

    @property
    def is_odd(self) -> bool:
        return not self.is_even

    @property
    def parity(self) -> int:
        return 0 if self.is_even else 1

    @property
    def is_positive(self) -> bool:
        return next(c for c in self.coords if c) > 0

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    def simple_coords(self) -> tuple[int, int, int]:
        return simple_root_coords(self.coords)

    def name(self) -> str:
        return render_root(self.coords)

    def __str__(self) -> str:
        return self.name()


_EVEN = [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
_ODD_POS = [(1, s2, s3) for s2 in (-1, 1) for s3 in (-1, 1)]
_ROOT_SET = frozenset(_EVEN + [tuple(-c for c in r) for r in _EVEN]
                      + _ODD_POS + [tuple(-c for c in r) for r in _ODD_POS])

SIMPLE_ROOTS: tuple[Weight, Weight, Weight] = ((1, -1, -1), (0, 2, 0), (0, 0, 2))

# Cartan matrix rows i, columns j: [h_i, e_j] = a_ij e_j
CARTAN_MATRIX = (
    (ZERO, ONE, A),
    (ScalarA(-1), ScalarA(2), ZERO),
    (ScalarA(-1), ZERO, ScalarA(2)),
)


@lru_cache(maxsize=None)
def all_roots() -> tuple[Root, ...]:
    """The 14 roots, ordered as even positive, even negative, odd positive, odd negative."""
    even_pos = sorted(Root(r) for r in _ROOT_SET if Root(r).is_even and Root(r).is_positive)
    even_neg = sorted(-r for r in even_pos)
    odd_pos = sorted(Root(r) for r in _ODD_POS)
    odd_neg = sorted(-r for r in odd_pos)
    return tuple(even_pos + even_neg + odd_pos + odd_neg)


def even_positive() -> tuple[Root, ...]:
    return all_roots()[0:3]


def even_negative() -> tuple[Root, ...]:
    return all_roots()[3:6]


def odd_positive() -> tuple[Root, ...]:
    return all_roots()[6:10]


def odd_negative() -> tuple[Root, ...]:
    return all_roots()[10:14]


def is_root(w: Iterable[int]) -> bool:
    return tuple(w) in _ROOT_SET


def simple_root_coords(w: Weight) -> tuple[int, int, int]:
    c1, c2, c3 = w
    if (c1 + c2) % 2 or (c1 + c3) % 2:
        raise RootError(f"{w} is not in the root lattice")
    return c1, (c1 + c2) // 2, (c1 + c3) // 2


def from_simple_coords(n: Iterable[int]) -> Weight:
    n1, n2, n3 = n
    return (n1, 2 * n2 - n1, 2 * n3 - n1)


def add(x: Weight, y: Weight, k: int = 1) -> Weight:
    return tuple(a + k * b for a, b in zip(x, y))


def _coords(x: "Root | Weight") -> Weight:
    return x.coords if isinstance(x, Root) else tuple(x)


# ---------------------------------------------------------------------------
# bilinear form and pairings

_EPS_NORMS = (-ONE_PLUS_A * Fraction(1, 2), ScalarA(Fraction(1, 2)), A * Fraction(1, 2))


def bilinear_form(x: "Root | Weight", y: "Root | Weight") -> ScalarA:
    """``(x, y)`` with ``(e1,e1) = -(1+a)/2, (e2,e2) = 1/2, (e3,e3) = a/2``."""
    out = ZERO
    for ci, di, n in zip(_coords(x), _coords(y), _EPS_NORMS):
        if ci and di:
            out = out + n * (ci * di)
    return out


@dataclass(frozen=True)
class CartanElement:
    """``z1*H1 + z2*H2 + z3*H3``."""

    coords: tuple[ScalarA, ScalarA, ScalarA]

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(as_scalar(c) for c in coords))
        if len(self.coords) != 3:
            raise ValueError("a Cartan element needs three coordinates")

    @classmethod
    def basis(cls, i: int) -> "CartanElement":
        """``H_i`` for ``i`` in 1..3."""
        return cls(tuple(ONE if j == i - 1 else ZERO for j in range(3)))

    @classmethod
    def from_h(cls, h_coords: Iterable) -> "CartanElement":
        """Convert ``x1*h1 + x2*h2 + x3*h3`` into the H basis."""
        x1, x2, x3 = (as_scalar(c) for c in h_coords)
        # h1 = H1, h2 = 2H1 - (1+a)H2 - aH3, h3 = H3
        return cls((x1 + 2 * x2, -ONE_PLUS_A * x2, x3 - A * x2))

    def to_h(self) -> tuple[ScalarA, ScalarA, ScalarA]:
        z1, z2, z3 = self.coords
        y2 = -z2 / ONE_PLUS_A
        return (z1 - 2 * y2, y2, z3 + A * y2)

    def __add__(self, other: "CartanElement") -> "CartanElement":
        return CartanElement(x + y for x, y in zip(self.coords, other.coords))

    def __sub__(self, other: "CartanElement") -> "CartanElement":
        return CartanElement(x - y for x, y in zip(self.coords, other.coords))

    def __neg__(self) -> "CartanElement":
        return CartanElement(-x for x in self.coords)

    def __mul__(self, s) -> "CartanElement":
        s = as_scalar(s)
        return CartanElement(x * s for x in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def in_h_Za(self) -> bool:
        """All coordinates in Z[a]."""
        return all(in_Z_bracket_a(z) for z in self.coords)

    def in_h0_Z(self) -> bool:
        """Integer combination of the even coroots."""
        return even_coroot_coefficients(self) is not None


def pairing(beta: "Root | Weight", H: CartanElement) -> ScalarA:
    """``beta(H)`` for a weight ``beta`` in epsilon coordinates."""
    c1, c2, c3 = _coords(beta)
    # beta(H1) = ((1+a)c1 + c2 + a c3)/2, beta(H2) = c1, beta(H3) = c3
    z1, z2, z3 = H.coords
    out = ZERO
    if z1:
        out = out + z1 * ((ONE_PLUS_A * c1 + c2 + A * c3) * Fraction(1, 2))
    if z2 and c1:
        out = out + z2 * c1
    if z3 and c3:
        out = out + z3 * c3
    return out


def pairing_h(beta: "Root | Weight", i: int) -> ScalarA:
    """``beta(h_i)`` from the Cartan matrix and the simple-root expansion."""
    n = simple_root_coords(_coords(beta))
    out = ZERO
    for j in range(3):
        if n[j]:
            out = out + CARTAN_MATRIX[i - 1][j] * n[j]
    return out


# coroots of positive roots, h-basis as printed, converted to H-basis
_POSITIVE_COROOTS_H = {
    (2, 0, 0): (2 * ONE / ONE_PLUS_A, -ONE / ONE_PLUS_A, -A / ONE_PLUS_A),
    (0, 2, 0): (ZERO, ONE, ZERO),
    (0, 0, 2): (ZERO, ZERO, ONE),
    (1, -1, -1): (ONE, ZERO, ZERO),
    (1, 1, -1): (ONE, -ONE, ZERO),
    (1, -1, 1): (ONE, ZERO, -A),
    (1, 1, 1): (ONE, -ONE, -A),
}


@lru_cache(maxsize=None)
def coroot(alpha: "Root | Weight") -> CartanElement:
    """``H_alpha`` in the H basis, with ``H_{-alpha} = -H_alpha``."""
    w = _coords(alpha)
    if w not in _ROOT_SET:
        raise RootError(f"{w} is not a root")
    r = Root(w)
    if r.is_positive:
        return CartanElement.from_h(_POSITIVE_COROOTS_H[w])
    return -coroot((-r).coords)


def even_coroot_coefficients(H: CartanElement) -> tuple[int, int, int] | None:
    """Integers ``n`` with ``H = sum n_i H_{2e_i}``, or None."""
    # H_{2e1} = H2, H_{2e3} = H3, H_{2e2} = 2H1 - (1+a)H2 - aH3
    z1, z2, z3 = H.coords
    n2 = z1 * Fraction(1, 2)
    n1 = z2 + ONE_PLUS_A * n2
    n3 = z3 + A * n2
    out = []
    for n in (n1, n2, n3):
        if not n.is_constant() or n.constant_value().denominator != 1:
            return None
        out.append(int(n.constant_value()))
    return tuple(out)


# ---------------------------------------------------------------------------
# root strings


@dataclass(frozen=True)
class RootString:
    base: Root
    direction: Root
    r: int
    q: int

    def members(self) -> list[Weight]:
        return [add(self.base.coords, self.direction.coords, k) for k in range(-self.r, self.q + 1)]


def _in_delta_or_zero(w: Weight) -> bool:
    return w == (0, 0, 0) or w in _ROOT_SET


def root_string(beta: "Root | Weight", alpha: "Root | Weight") -> RootString:
    """The alpha-string through beta: ``beta - r*alpha, ..., beta + q*alpha``."""
    b, a = _coords(beta), _coords(alpha)
    if a == (0, 0, 0):
        raise RootError("direction must be nonzero")
    r = 0
    while _in_delta_or_zero(add(b, a, -(r + 1))):
        r += 1
    q = 0
    while _in_delta_or_zero(add(b, a, q + 1)):
        q += 1
    return RootString(Root(b), Root(a), r, q)


# ---------------------------------------------------------------------------
# names

_SIMPLE_NAMES = ("a1", "a2", "a3")


def render_root(w: Weight) -> str:
    """Simple-root rendering, e.g. ``a1+a2``, ``-2a1-a2-a3``."""
    n = simple_root_coords(w)
    neg = all(x <= 0 for x in n) and any(n)
    if neg:
        n = tuple(-x for x in n)
    parts = []
    for k, name in zip(n, _SIMPLE_NAMES):
        if k == 0:
            continue
        parts.append(name if k == 1 else f"{k}{name}")
    body = "+".join(parts) if parts else "0"
    if neg:
        return "-" + "-".join(parts)
    return body


def root_table() -> list[dict]:
    """JSON-ready root data."""
    from .scalars import render_scalar

    out = []
    for r in all_roots():
        out.append({
            "root": r.name(),
            "eps": list(r.coords),
            "simple": list(r.simple_coords()),
            "parity": "even" if r.is_even else "odd",
            "positive": r.is_positive,
            "coroot": [render_scalar(z) for z in coroot(r).coords],
        })
    return out
