"""Exact scalars in Q[a] localized at (1 + a).

Every structure constant of D(2,1;a) in the Chevalley basis lives in
``Z[a][(1+a)^-1]``, so a scalar is stored as a polynomial numerator in ``a``
together with a power of ``(1 + a)`` in the denominator.  Membership in
``Z[a]`` and in ``Z_a`` (the ring generated by the binomials ``binom(a, n)``)
is decided by inspection of that canonical form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

Rational = Union[int, Fraction]


class SpecializationError(ValueError):
    """Raised when the parameter ``a`` is specialized to 0 or -1."""


# ---------------------------------------------------------------------------
# univariate polynomials with rational coefficients


class Poly:
    """Dense univariate polynomial over Q; ``coeffs[n]`` multiplies ``x**n``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Rational) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly | Rational") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly | Rational") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other: Rational) -> "Poly":
        return Poly.const(other) - self

    def __mul__(self, other: "Poly | Rational") -> "Poly":
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


PolyA = Poly


@lru_cache(maxsize=None)
def binom_poly(n: int) -> Poly:
    """The polynomial ``y(y-1)...(y-n+1)/n!`` in a formal variable ``y``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = Poly.const(1)
    for i in range(n):
        p = p * Poly((-i, 1))
    return p * Fraction(1, math.factorial(n))


@dataclass(frozen=True)
class BinomialBasisExpansion:
    """Coefficients ``c_n`` of ``sum_n c_n * binom(a, n)``."""

    coeffs: tuple[Fraction, ...]

    def to_poly(self) -> Poly:
        out = Poly()
        for n, c in enumerate(self.coeffs):
            if c:
                out = out + binom_poly(n) * c
        return out

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def to_binomial_basis(p: Poly) -> BinomialBasisExpansion:
    """Newton forward differences of ``p`` at 0."""
    if p.is_zero():
        return BinomialBasisExpansion(())
    values = [p(Fraction(k)) for k in range(p.degree + 1)]
    coeffs = []
    while values:
        coeffs.append(Fraction(values[0]))
        values = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return BinomialBasisExpansion(tuple(coeffs))


# ---------------------------------------------------------------------------
# ScalarA: integer numerator / (common denominator * (1+a)^k)


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _mul_one_plus_a(cs: Sequence[int], times: int) -> list[int]:
    out = list(cs)
    for _ in range(times):
        out = [(out[i] if i < len(out) else 0) + (out[i - 1] if i > 0 else 0)
               for i in range(len(out) + 1)]
    return out


def _div_one_plus_a(cs: Sequence[int]) -> list[int] | None:
    """Exact quotient by (1 + a), or None when (1 + a) does not divide."""
    # synthetic division from the top: q[n-1] = c[n], q[i-1] = c[i] - q[i]
    n = len(cs) - 1
    if n < 1:
        return None
    q = [0] * n
    q[n - 1] = cs[n]
    for i in range(n - 1, 0, -1):
        q[i - 1] = cs[i] - q[i]
    if cs[0] - q[0] != 0:
        return None
    return q


class ScalarA:
    """An element ``p(a) / (d * (1+a)**k)`` of ``Z[a][(1+a)^-1] ⊗ Q``.

    Canonical form: ``p`` has integer coefficients with content coprime to
    ``d > 0``, and ``(1 + a)`` does not divide ``p`` whenever ``k > 0``.
    Instances are immutable and hashable.
    """

    __slots__ = ("_c", "_d", "_k", "_hash")

    def __init__(self, value: "Rational | ScalarA | Poly" = 0, denom_power: int = 0):
        if isinstance(value, ScalarA):
            c, d, k = value._c, value._d, value._k + denom_power
        elif isinstance(value, Poly):
            d = 1
            for f in value.coeffs:
                d = d * f.denominator // math.gcd(d, f.denominator)
            c = tuple(int(f * d) for f in value.coeffs)
            k = denom_power
        else:
            f = Fraction(value)
            c, d, k = ((f.numerator,) if f else ()), f.denominator, denom_power
        if denom_power < 0:
            raise ValueError("denominator power must be non-negative")
        self._set(list(c), d, k)

    def _set(self, cs: list[int], d: int, k: int) -> None:
        cs = _trim(cs)
        if not cs:
            self._c, self._d, self._k = (), 1, 0
            self._hash = None
            return
        g = d
        for x in cs:
            g = math.gcd(g, x)
            if g == 1:
                break
        if g != 1:
            cs = [x // g for x in cs]
            d //= g
        while k > 0:
            q = _div_one_plus_a(cs)
            if q is None:
                break
            cs, k = q, k - 1
        self._c, self._d, self._k = tuple(cs), d, k
        self._hash = None

    @classmethod
    def _raw(cls, cs: list[int], d: int, k: int) -> "ScalarA":
        s = cls.__new__(cls)
        s._set(cs, d, k)
        return s

    # -- constructors -------------------------------------------------------
    @classmethod
    def a(cls) -> "ScalarA":
        return cls._raw([0, 1], 1, 0)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Rational], denom_power: int = 0) -> "ScalarA":
        return cls(Poly(coeffs), denom_power)

    # -- inspection ---------------------------------------------------------
    @property
    def numerator(self) -> Poly:
        return Poly(Fraction(c, self._d) for c in self._c)

    @property
    def denom_power(self) -> int:
        return self._k

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_constant(self) -> bool:
        return self._k == 0 and len(self._c) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return Fraction(self._c[0], self._d) if self._c else Fraction(0)

    def is_integer(self) -> bool:
        return self.is_constant() and self._d == 1

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "ScalarA":
        if isinstance(x, ScalarA):
            return x
        if isinstance(x, (int, Fraction)):
            return ScalarA(x)
        return NotImplemented

    def __add__(self, other) -> "ScalarA":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o._c:
            return self
        if not self._c:
            return o
        k = max(self._k, o._k)
        a = _mul_one_plus_a(self._c, k - self._k)
        b = _mul_one_plus_a(o._c, k - o._k)
        d = self._d * o._d // math.gcd(self._d, o._d)
        fa, fb = d // self._d, d // o._d
        n = max(len(a), len(b))
        cs = [(a[i] * fa if i < len(a) else 0) + (b[i] * fb if i < len(b) else 0)
              for i in range(n)]
        return ScalarA._raw(cs, d, k)

    __radd__ = __add__

    def __neg__(self) -> "ScalarA":
        s = ScalarA.__new__(ScalarA)
        s._c, s._d, s._k, s._hash = tuple(-c for c in self._c), self._d, self._k, None
        return s

    def __sub__(self, other) -> "ScalarA":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "ScalarA":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "ScalarA":
        if isinstance(other, int):
            if other == 0 or not self._c:
                return ZERO
            g = math.gcd(other, self._d)
            s = ScalarA.__new__(ScalarA)
            f = other // g
            s._c, s._d, s._k, s._hash = tuple(c * f for c in self._c), self._d // g, self._k, None
            return s
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self._c or not o._c:
            return ZERO
        if len(o._c) == 1 and o._k == 0 and o._d == 1:
            return self * o._c[0]
        if len(self._c) == 1 and self._k == 0 and self._d == 1:
            return o * self._c[0]
        out = [0] * (len(self._c) + len(o._c) - 1)
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(o._c):
                    out[i + j] += x * y
        return ScalarA._raw(out, self._d * o._d, self._k + o._k)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ScalarA":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def unit_part(self) -> tuple[Fraction, int] | None:
        """If ``self = c * (1+a)**m`` return ``(c, m)``; otherwise None."""
        if not self._c:
            return None
        cs, m = list(self._c), -self._k
        while len(cs) > 1:
            q = _div_one_plus_a(cs)
            if q is None:
                return None
            cs, m = q, m + 1
        return Fraction(cs[0], self._d), m

    def is_unit(self) -> bool:
        return self.unit_part() is not None

    def inverse(self) -> "ScalarA":
        up = self.unit_part()
        if up is None:
            raise ZeroDivisionError(f"{self} is not invertible in Z[a][(1+a)^-1] ⊗ Q")
        c, m = up
        if m >= 0:
            return ScalarA(1 / c, m)
        return ScalarA(1 / c) * ONE_PLUS_A ** (-m)

    def __truediv__(self, other) -> "ScalarA":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "ScalarA":
        return self._coerce(other) * self.inverse()

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ScalarA(other)
        if not isinstance(other, ScalarA):
            return NotImplemented
        return self._c == other._c and self._d == other._d and self._k == other._k

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._c, self._d, self._k))
        return self._hash

    # -- evaluation ---------------------------------------------------------
    def __call__(self, a0: Rational) -> Fraction:
        return specialize(self, a0)

    def __repr__(self) -> str:
        return f"ScalarA({render_scalar(self)!r})"

    def __str__(self) -> str:
        return render_scalar(self)


ZERO = ScalarA(0)
ONE = ScalarA(1)
A = ScalarA.a()
ONE_PLUS_A = ONE + A
INV_ONE_PLUS_A = ScalarA(1, 1)


def as_scalar(x) -> ScalarA:
    if isinstance(x, ScalarA):
        return x
    if isinstance(x, Poly):
        return ScalarA(x)
    return ScalarA(x)


# ---------------------------------------------------------------------------
# membership, specialization, binomials


def in_Z_bracket_a(s: ScalarA) -> bool:
    return s.denom_power == 0 and s._d == 1


def in_Za(s: ScalarA) -> bool:
    """True iff ``s`` is an integer combination of the ``binom(a, n)``.

    That Z-span is closed under products (Vandermonde), so it is the ring
    generated by the binomials.
    """
    if s.denom_power:
        return False
    return to_binomial_basis(s.numerator).is_integral()


def specialize(s: ScalarA, a0: Rational) -> Fraction:
    a0 = Fraction(a0)
    if a0 == 0 or a0 == -1:
        raise SpecializationError(f"a = {a0} is excluded (a must avoid 0 and -1)")
    return s.numerator(a0) / (1 + a0) ** s.denom_power


def binomial(y, n: int):
    """``binom(y, n)`` for ``y`` an int, Fraction, ScalarA or Poly."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if isinstance(y, int) and not isinstance(y, bool):
        if y >= 0:
            return math.comb(y, n)
        return (-1) ** n * math.comb(n - y - 1, n)
    if isinstance(y, ScalarA):
        return _binom_scalar(y, n)
    out = 1
    for i in range(n):
        out = out * (y - i)
    return out * Fraction(1, math.factorial(n))


@lru_cache(maxsize=65536)
def _binom_scalar(y: ScalarA, n: int) -> ScalarA:
    if y.is_integer():
        return ScalarA(binomial(int(y.constant_value()), n))
    out = ONE
    for i in range(n):
        out = out * (y - i)
    return out * Fraction(1, math.factorial(n))


# ---------------------------------------------------------------------------
# truncated power series in (ell - 1)


def _series_mul(x: Sequence[ScalarA], y: Sequence[ScalarA], order: int) -> list[ScalarA]:
    out = [ZERO] * (order + 1)
    for i, xi in enumerate(x[: order + 1]):
        if xi:
            for j, yj in enumerate(y[: order + 1 - i]):
                if yj:
                    out[i + j] = out[i + j] + xi * yj
    return out


def truncated_power_series_power(
    exponent, truncation: int, offset: Sequence[ScalarA] | None = None
) -> list[ScalarA]:
    """``(1 + u)**exponent = sum_n binom(exponent, n) u**n`` modulo ``u**(N+1)``.

    ``offset`` is the series substituted for ``u`` (constant term zero);
    by default it is ``u`` itself.  Returns the coefficient list in ``u``.
    """
    if truncation < 0:
        raise ValueError("truncation must be non-negative")
    z = as_scalar(exponent)
    if offset is None:
        offset = [ZERO, ONE]
    offset = [as_scalar(c) for c in offset]
    if offset and offset[0]:
        raise ValueError("offset series must have zero constant term")
    out = [ZERO] * (truncation + 1)
    power = [ONE]
    for n in range(truncation + 1):
        c = _binom_scalar(z, n)
        if c:
            for i, p in enumerate(power[: truncation + 1]):
                out[i] = out[i] + c * p
        power = _series_mul(power, offset, truncation)
    return out


def check_grouplike(
    exponent, truncation: int,
    coefficient: Callable[[ScalarA, int], ScalarA] | None = None,
) -> bool:
    """Test ``(l1*l2)**z == l1**z * l2**z`` up to total degree ``truncation``.

    With ``l1 = 1 + u`` and ``l2 = 1 + v``; ``coefficient(z, n)`` supplies the
    n-th series coefficient (default ``binom(z, n)``), which lets callers
    feed a corrupted series.
    """
    if truncation < 1:
        raise ValueError("truncation must be at least 1")
    z = as_scalar(exponent)
    coeff = coefficient or _binom_scalar
    N = truncation
    cs = [as_scalar(coeff(z, n)) for n in range(N + 1)]

    def mul(p: dict, q: dict) -> dict:
        out: dict[tuple[int, int], ScalarA] = {}
        for (i, j), x in p.items():
            for (k, l), y in q.items():
                if i + j + k + l <= N:
                    key = (i + k, j + l)
                    out[key] = out.get(key, ZERO) + x * y
        return {m: c for m, c in out.items() if c}

    w = {(1, 0): ONE, (0, 1): ONE, (1, 1): ONE}   # l1*l2 - 1
    lhs: dict = {}
    power: dict = {(0, 0): ONE}
    for n in range(N + 1):
        for m, c in power.items():
            lhs[m] = lhs.get(m, ZERO) + cs[n] * c
        power = mul(power, w)
    left = {(i, 0): c for i, c in enumerate(cs) if c}
    right = {(0, j): c for j, c in enumerate(cs) if c}
    rhs = mul(left, right)
    lhs = {m: c for m, c in lhs.items() if c}
    return lhs == rhs


# ---------------------------------------------------------------------------
# rendering


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_poly(p: Poly, var: str = "a") -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for n in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[n]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = "" if n == 0 else (var if n == 1 else f"{var}^{n}")
        if not mono:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_rational(mag)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def render_scalar(s: ScalarA) -> str:
    """Canonical text: e.g. ``(2*a - 1)/(1+a)^2``."""
    num = render_poly(s.numerator)
    k = s.denom_power
    if k == 0:
        return num
    if len([c for c in s.numerator.coeffs if c]) > 1:
        num = f"({num})"
    den = "(1+a)" if k == 1 else f"(1+a)^{k}"
    return f"{num}/{den}"


def render_term(c: ScalarA, body: str) -> str:
    """``c*body`` with parentheses only around non-constant coefficients."""
    cs = render_scalar(c)
    if not body:
        return cs if c.is_constant() else f"({cs})"
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{cs}*{body}" if c.is_constant() else f"({cs})*{body}"


def join_terms(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out
