"""Finite supercommutative carrier algebras.

A carrier has ``n`` odd generators ``x1..xn`` (Grassmann variables) and
``d`` even dual generators ``eps1..epsd`` with ``eps_k**2 = 0``.  Basis
monomials are square-free and encoded as bitmasks: bits ``0..n-1`` for the
odd generators, bits ``n..n+d-1`` for the duals.  A square-zero carrier
additionally kills every product of two odd generators.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .scalars import ONE, ZERO, ScalarA, as_scalar, binomial, join_terms, render_term

DEFAULT_ODD_CAP = 8


class CarrierError(ValueError):
    pass


class NotAUnitError(ArithmeticError):
    pass


def odd_cap() -> int:
    raw = os.environ.get("SUPERCHEVALLEY_ODD_CAP")
    if raw is None:
        return DEFAULT_ODD_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise CarrierError(f"SUPERCHEVALLEY_ODD_CAP must be an integer, got {raw!r}") from None
    if cap < 0:
        raise CarrierError("SUPERCHEVALLEY_ODD_CAP must be non-negative")
    return cap


@lru_cache(maxsize=None)
def _odd_sign(m1: int, m2: int) -> int:
    """Sign of reordering ``m1 * m2`` (odd bits only) into increasing order."""
    inv = 0
    b = m2
    while b:
        low = b & -b
        inv += bin(m1 & ~((low << 1) - 1)).count("1")
        b ^= low
    return -1 if inv & 1 else 1


@dataclass(frozen=True)
class Carrier:
    odd: int
    duals: int = 0
    square_zero_odd: bool = False

    def __post_init__(self):
        if self.odd < 0 or self.duals < 0:
            raise CarrierError("generator counts must be non-negative")
        cap = odd_cap()
        if self.odd > cap:
            raise CarrierError(
                f"{self.odd} odd generators exceed the cap of {cap} "
                "(set SUPERCHEVALLEY_ODD_CAP to raise it)"
            )

    @classmethod
    def grassmann(cls, n: int) -> "Carrier":
        return cls(n)

    @classmethod
    def square_zero(cls, n: int) -> "Carrier":
        return cls(n, 0, True)

    @classmethod
    def dual_number(cls) -> "Carrier":
        return cls(0, 1)

    @classmethod
    def dual_odd(cls, n: int, duals: int = 1) -> "Carrier":
        return cls(n, duals)

    @property
    def kind(self) -> str:
        if self.square_zero_odd:
            return "SquareZeroOdd"
        if self.duals and self.odd == 0:
            return "DualNumber"
        if self.duals:
            return "DualOdd"
        return "Full"

    @property
    def odd_mask(self) -> int:
        return (1 << self.odd) - 1

    def dual_bit(self, k: int) -> int:
        if not 1 <= k <= self.duals:
            raise CarrierError(f"no dual generator eps{k} in {self}")
        return 1 << (self.odd + k - 1)

    def basis(self) -> list[int]:
        masks = range(1 << (self.odd + self.duals))
        if self.square_zero_odd:
            return [m for m in masks if bin(m & self.odd_mask).count("1") <= 1]
        return list(masks)

    @property
    def dimension(self) -> int:
        return len(self.basis())

    def mono_mul(self, m1: int, m2: int) -> tuple[int, int]:
        """``(sign, mask)`` of a product of basis monomials; sign 0 means zero."""
        if m1 & m2:
            return 0, 0
        om = self.odd_mask
        o1, o2 = m1 & om, m2 & om
        m = m1 | m2
        if self.square_zero_odd and bin(m & om).count("1") > 1:
            return 0, 0
        return _odd_sign(o1, o2), m

    # element constructors
    def element(self, terms: Mapping[int, object] | None = None) -> "CarrierElement":
        return CarrierElement(self, terms)

    def scalar(self, c) -> "CarrierElement":
        return CarrierElement(self, {0: c})

    def one(self) -> "CarrierElement":
        return self.scalar(1)

    def zero(self) -> "CarrierElement":
        return CarrierElement(self, {})

    def xi(self, i: int) -> "CarrierElement":
        if not 1 <= i <= self.odd:
            raise CarrierError(f"no odd generator x{i} in {self}")
        return CarrierElement(self, {1 << (i - 1): ONE})

    def eps(self, k: int = 1) -> "CarrierElement":
        return CarrierElement(self, {self.dual_bit(k): ONE})

    def mask_name(self, m: int) -> str:
        parts = [f"x{i + 1}" for i in range(self.odd) if m >> i & 1]
        for k in range(self.duals):
            if m >> (self.odd + k) & 1:
                parts.append("eps" if self.duals == 1 else f"eps{k + 1}")
        return "*".join(parts)

    def without_dual(self, k: int = 1) -> "Carrier":
        self.dual_bit(k)
        return Carrier(self.odd, self.duals - 1, self.square_zero_odd)

    def with_dual(self) -> "Carrier":
        return Carrier(self.odd, self.duals + 1, self.square_zero_odd)


class CarrierElement:
    """An element ``sum c_m * m`` of a carrier, ``c_m`` in ScalarA."""

    __slots__ = ("carrier", "terms")

    def __init__(self, carrier: Carrier, terms: Mapping[int, object] | None = None):
        self.carrier = carrier
        out = {}
        om = carrier.odd_mask
        for m, c in (terms or {}).items():
            c = as_scalar(c)
            if not c:
                continue
            if carrier.square_zero_odd and bin(m & om).count("1") > 1:
                continue
            out[m] = c
        self.terms: dict[int, ScalarA] = out

    @classmethod
    def _raw(cls, carrier: Carrier, terms: dict[int, ScalarA]) -> "CarrierElement":
        e = cls.__new__(cls)
        e.carrier = carrier
        e.terms = terms
        return e

    def _check(self, other: "CarrierElement") -> None:
        if other.carrier != self.carrier:
            raise CarrierError(f"carrier mismatch: {self.carrier} vs {other.carrier}")

    def _coerce(self, other) -> "CarrierElement":
        if isinstance(other, CarrierElement):
            self._check(other)
            return other
        return CarrierElement(self.carrier, {0: other})

    def __add__(self, other) -> "CarrierElement":
        o = self._coerce(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = out.get(m, ZERO) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return CarrierElement._raw(self.carrier, out)

    __radd__ = __add__

    def __neg__(self) -> "CarrierElement":
        return CarrierElement._raw(self.carrier, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "CarrierElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CarrierElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CarrierElement":
        if not isinstance(other, CarrierElement):
            s = as_scalar(other)
            if not s:
                return self.carrier.zero()
            return CarrierElement._raw(self.carrier, {m: c * s for m, c in self.terms.items()})
        return mul(self, other)

    def __rmul__(self, other) -> "CarrierElement":
        return self * other

    def __pow__(self, n: int) -> "CarrierElement":
        if n < 0:
            return invert_unit(self) ** (-n)
        out = self.carrier.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CarrierElement):
            return self.carrier == other.carrier and self.terms == other.terms
        if isinstance(other, (int, ScalarA)) or hasattr(other, "denominator"):
            return self.terms == ({0: as_scalar(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.carrier, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # structure
    def constant_term(self) -> ScalarA:
        return self.terms.get(0, ZERO)

    def _odd_degree(self, m: int) -> int:
        return bin(m & self.carrier.odd_mask).count("1")

    def even_part(self) -> "CarrierElement":
        return CarrierElement._raw(self.carrier,
                                   {m: c for m, c in self.terms.items() if self._odd_degree(m) % 2 == 0})

    def odd_part(self) -> "CarrierElement":
        return CarrierElement._raw(self.carrier,
                                   {m: c for m, c in self.terms.items() if self._odd_degree(m) % 2 == 1})

    def is_even(self) -> bool:
        return all(self._odd_degree(m) % 2 == 0 for m in self.terms)

    def is_odd(self) -> bool:
        return all(self._odd_degree(m) % 2 == 1 for m in self.terms)

    def parity(self) -> int | None:
        if self.is_even():
            return 0
        if self.is_odd():
            return 1
        return None

    def degree(self) -> int:
        """Lowest total degree (odd and dual generators) among the terms."""
        return min((bin(m).count("1") for m in self.terms), default=10 ** 9)

    def nilpotent_part(self) -> "CarrierElement":
        return CarrierElement._raw(self.carrier, {m: c for m, c in self.terms.items() if m})

    def map_coefficients(self, f) -> "CarrierElement":
        return CarrierElement(self.carrier, {m: f(c) for m, c in self.terms.items()})

    def render(self) -> str:
        order = sorted(self.terms, key=lambda m: (bin(m).count("1"), m))
        return join_terms([render_term(self.terms[m], self.carrier.mask_name(m)) for m in order])

    def __repr__(self) -> str:
        return f"CarrierElement({self.render()})"

    __str__ = render


def mul(x: CarrierElement, y: CarrierElement) -> CarrierElement:
    x._check(y)
    car = x.carrier
    out: dict[int, ScalarA] = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            sign, m = car.mono_mul(m1, m2)
            if sign:
                v = c1 * c2
                if sign < 0:
                    v = -v
                out[m] = out.get(m, ZERO) + v
    return CarrierElement._raw(car, {m: c for m, c in out.items() if c})


def invert_unit(t: CarrierElement) -> CarrierElement:
    """Inverse through the finite geometric series in the nilpotent part."""
    c = t.constant_term()
    if not c:
        raise NotAUnitError(f"{t.render()} has zero constant term and is not a unit")
    cinv = ONE / c
    u = t.nilpotent_part() * cinv
    out = t.carrier.one()
    term = t.carrier.one()
    while True:
        term = -(term * u)
        if term.is_zero():
            break
        out = out + term
    return out * cinv


def in_Pa(t: CarrierElement) -> bool:
    """Membership in ``1 + N(A_0)``: even with constant term 1."""
    return t.is_even() and t.constant_term() == 1


def power_za(t: CarrierElement, z) -> CarrierElement:
    """``t**z = sum_n binom(z, n) (t - 1)**n`` for ``t`` in P_a."""
    if not in_Pa(t):
        raise CarrierError(f"{t.render()} is not in P_a = 1 + N(A_0)")
    z = as_scalar(z)
    u = t - 1
    out = t.carrier.one()
    un = t.carrier.one()
    n = 0
    while True:
        n += 1
        un = un * u
        if un.is_zero():
            break
        b = binomial(z, n)
        if b:
            out = out + un * b
    return out


def integer_power(t: CarrierElement, k: int) -> CarrierElement:
    return t ** k


# ---------------------------------------------------------------------------
# dual numbers: A[eps] = A + eps*A with maps i: A -> A[eps] and p: A[eps] -> A


def _remove_bit(m: int, pos: int) -> int:
    low = m & ((1 << pos) - 1)
    return low | ((m >> (pos + 1)) << pos)


def _insert_bit(m: int, pos: int) -> int:
    low = m & ((1 << pos) - 1)
    return low | ((m >> pos) << (pos + 1))


def dual_number_split(x: CarrierElement, k: int | None = None) -> tuple[CarrierElement, CarrierElement]:
    """``x = base + eps_k * part``; both returned in the carrier without ``eps_k``."""
    car = x.carrier
    if car.duals == 0:
        raise CarrierError("carrier has no dual generator")
    k = car.duals if k is None else k
    bit = car.dual_bit(k)
    pos = bit.bit_length() - 1
    target = car.without_dual(k)
    base, part = {}, {}
    for m, c in x.terms.items():
        if m & bit:
            part[_remove_bit(m, pos)] = c
        else:
            base[_remove_bit(m, pos)] = c
    return CarrierElement(target, base), CarrierElement(target, part)


def p_map(x: CarrierElement, k: int | None = None) -> CarrierElement:
    """``p: A[eps] -> A``, setting ``eps_k = 0``."""
    return dual_number_split(x, k)[0]


def i_map(y: CarrierElement) -> CarrierElement:
    """``i: A -> A[eps]``, adjoining a new last dual generator."""
    car = y.carrier.with_dual()
    pos = y.carrier.odd + y.carrier.duals
    return CarrierElement(car, {_insert_bit(m, pos): c for m, c in y.terms.items()})
