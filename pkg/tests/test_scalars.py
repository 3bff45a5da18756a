import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superchevalley.scalars import (
    A, INV_ONE_PLUS_A, ONE, ONE_PLUS_A, ZERO, Poly, ScalarA, SpecializationError, binom_poly,
    binomial, check_grouplike, in_Z_bracket_a, in_Za, render_scalar,
    specialize, to_binomial_basis, truncated_power_series_power,
)

small = st.integers(-6, 6)
scalars = st.builds(
    lambda cs, k, d: ScalarA.from_coeffs([Fraction(c, d) for c in cs], k),
    st.lists(small, max_size=4), st.integers(0, 2), st.sampled_from([1, 2, 3]),
)
points = st.sampled_from([Fraction(2), Fraction(3), Fraction(-3), Fraction(1, 2), Fraction(5, 7)])


def test_binom_poly_examples():
    assert binom_poly(2) == Poly([0, Fraction(-1, 2), Fraction(1, 2)])
    assert binom_poly(0) == Poly([1])
    assert binom_poly(3)(4) == math.comb(4, 3)


def test_canonical_form_cancels_one_plus_a():
    assert ONE_PLUS_A * INV_ONE_PLUS_A == ONE
    assert (A * A - 1) / ONE_PLUS_A == A - 1
    assert (ONE_PLUS_A * ONE_PLUS_A) * INV_ONE_PLUS_A ** 2 == 1
    assert (A + 1) * ScalarA(1, 1) == 1


def test_inverse_only_for_units():
    assert (2 * ONE_PLUS_A ** 3).inverse() == ScalarA(Fraction(1, 2), 3)
    with pytest.raises(ZeroDivisionError):
        A.inverse()
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@given(scalars, scalars, points)
def test_arithmetic_commutes_with_specialization(x, y, a0):
    assert specialize(x + y, a0) == specialize(x, a0) + specialize(y, a0)
    assert specialize(x * y, a0) == specialize(x, a0) * specialize(y, a0)
    assert specialize(x - y, a0) == specialize(x, a0) - specialize(y, a0)


@given(scalars, scalars, scalars)
def test_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x - x == ZERO


@given(st.lists(st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6)), max_size=6))
def test_binomial_basis_roundtrip(cs):
    p = Poly(cs)
    assert to_binomial_basis(p).to_poly() == p


@given(st.lists(st.integers(-5, 5), max_size=5))
def test_binomial_basis_integral_iff_integer_valued(cs):
    # oracle: a polynomial of degree d is integer-valued iff it is integral on 0..d
    p = sum((binom_poly(n) * c for n, c in enumerate(cs)), Poly())
    vals = [p(k) for k in range(len(cs) + 1)]
    assert all(v.denominator == 1 for v in vals)
    assert in_Za(ScalarA(p))


def test_membership_predicates():
    assert in_Z_bracket_a(A * A - 3)
    assert not in_Z_bracket_a(ScalarA(Fraction(1, 2)) * A)
    assert in_Za(ScalarA(binom_poly(2)))          # (a^2 - a)/2
    assert not in_Za(ScalarA(Fraction(1, 2)) * A)
    assert not in_Za(INV_ONE_PLUS_A)


def test_specialize_rejects_excluded_values():
    for bad in (0, -1):
        with pytest.raises(SpecializationError):
            specialize(A, bad)
    assert specialize(INV_ONE_PLUS_A, 2) == Fraction(1, 3)


@pytest.mark.parametrize("a0", [2, 3, 5])
def test_binomial_of_scalar_matches_integer_binomial(a0):
    for n in range(6):
        assert specialize(binomial(A, n), a0) == math.comb(a0, n)
        assert specialize(binomial(A - 1, n), a0) == math.comb(a0 - 1, n)


def test_power_series_power_integer_exponent():
    # (1+u)^3 truncated
    assert truncated_power_series_power(3, 5) == [ScalarA(math.comb(3, n)) for n in range(6)]


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_grouplike(k):
    assert check_grouplike(A ** k, 6)


def test_grouplike_detects_corruption():
    assert not check_grouplike(A, 6, coefficient=lambda z, n: binomial(z, n) * (2 if n == 2 else 1))


@pytest.mark.parametrize("s,text", [
    (A * 2 - 1, "2*a - 1"),
    (ScalarA(Fraction(1, 2)) * A, "1/2*a"),
    ((A * 2 - 1) * ScalarA(1, 2), "(2*a - 1)/(1+a)^2"),
    (ZERO, "0"),
])
def test_render(s, text):
    assert render_scalar(s) == text
