import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superchevalley.carriers import (
    Carrier, CarrierError, NotAUnitError, dual_number_split, i_map, in_Pa, invert_unit, p_map,
    power_za,
)
from superchevalley.scalars import A, ONE_PLUS_A, ScalarA

G4 = Carrier.grassmann(4)
x1, x2, x3, x4 = (G4.xi(i) for i in range(1, 5))


def elements(car: Carrier, coeffs=st.integers(-3, 3)):
    basis = car.basis()
    return st.dictionaries(st.sampled_from(basis), coeffs, max_size=6).map(car.element)


def homogeneous(car: Carrier):
    return st.tuples(elements(car), st.booleans()).map(
        lambda p: p[0].odd_part() if p[1] else p[0].even_part()
    )


def test_grassmann_relations():
    assert x1 * x2 == -(x2 * x1)
    assert (x1 * x1).is_zero()
    u = 1 + x1 * x2
    assert u * (1 - x1 * x2) == 1
    assert G4.dimension == 16


def test_render():
    assert (3 * x1 * x2 - x3 + 2).render() == "2 - x3 + 3*x1*x2"
    assert (A * x1).render() == "(a)*x1"
    assert G4.zero().render() == "0"


def test_invert_unit():
    t = 2 + x1 * x2 + A * x3 * x4
    assert t * invert_unit(t) == 1
    assert invert_unit(t) * t == 1
    assert t ** -2 * t ** 2 == 1
    with pytest.raises(NotAUnitError):
        invert_unit(x1 * x2)


def test_Pa_membership():
    assert in_Pa(1 + x1 * x2)
    assert not in_Pa(2 + x1 * x2)
    assert not in_Pa(1 + x1)
    assert not in_Pa(G4.one() * ONE_PLUS_A)


def test_power_za_examples():
    n = x1 * x2 + x3 * x4
    t = 1 + n
    assert power_za(t, A) == 1 + A * n + (A * (A - 1) / 2) * n * n
    assert power_za(t, 3) == t ** 3
    assert power_za(t, -1) == invert_unit(t)
    with pytest.raises(CarrierError):
        power_za(2 + n, A)


@settings(max_examples=60, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4), elements(G4, st.integers(-2, 2)))
def test_power_za_is_exponential(p, q, e):
    t = 1 + e.even_part().nilpotent_part()
    assert power_za(t, A * p + q) == power_za(t, A * p) * power_za(t, q)
    assert power_za(power_za(t, p), q) == power_za(t, p * q)


@settings(max_examples=60, deadline=None)
@given(homogeneous(G4), homogeneous(G4))
def test_supercommutativity(x, y):
    px, py = x.parity(), y.parity()
    if px is None or py is None:
        return
    assert x * y == (-1) ** (px * py) * (y * x)


@settings(max_examples=60, deadline=None)
@given(elements(G4), elements(G4), elements(G4))
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) - y == x


@settings(max_examples=40, deadline=None)
@given(elements(G4), elements(G4))
def test_parity_is_a_grading(x, y):
    assert (x * y).even_part() == x.even_part() * y.even_part() + x.odd_part() * y.odd_part()
    assert x.even_part() + x.odd_part() == x


@settings(max_examples=40, deadline=None)
@given(elements(Carrier.dual_odd(2)), elements(Carrier.dual_odd(2)))
def test_projection_is_a_homomorphism(x, y):
    assert p_map(x * y) == p_map(x) * p_map(y)
    assert p_map(x + y) == p_map(x) + p_map(y)


@settings(max_examples=40, deadline=None)
@given(elements(Carrier.grassmann(3)), elements(Carrier.grassmann(3)))
def test_inclusion_is_a_homomorphism_and_split(x, y):
    assert i_map(x * y) == i_map(x) * i_map(y)
    assert p_map(i_map(x)) == x
    base, part = dual_number_split(i_map(x))
    assert base == x and part.is_zero()


def test_dual_numbers():
    D = Carrier.dual_number()
    eps = D.eps()
    assert (eps * eps).is_zero()
    assert p_map(eps).is_zero()
    assert D.kind == "DualNumber"
    base, part = dual_number_split(3 + A * eps)
    assert base == 3 and part == A
    E = Carrier.dual_odd(2)
    assert E.kind == "DualOdd"
    assert E.eps() * E.xi(1) == E.xi(1) * E.eps()
    assert (E.eps() * E.xi(1)).render() == "x1*eps"


def test_square_zero_carrier():
    S = Carrier.square_zero(3)
    assert S.kind == "SquareZeroOdd"
    assert (S.xi(1) * S.xi(2)).is_zero()
    assert S.dimension == 4
    assert S.xi(1) * 2 + S.xi(3) != 0


def test_odd_cap(monkeypatch):
    with pytest.raises(CarrierError, match="cap of 8"):
        Carrier.grassmann(9)
    monkeypatch.setenv("SUPERCHEVALLEY_ODD_CAP", "10")
    assert Carrier.grassmann(9).odd == 9
    monkeypatch.setenv("SUPERCHEVALLEY_ODD_CAP", "many")
    with pytest.raises(CarrierError):
        Carrier.grassmann(1)


def test_carrier_mismatch_and_bad_generators():
    with pytest.raises(CarrierError):
        G4.xi(1) + Carrier.grassmann(3).xi(1)
    with pytest.raises(CarrierError):
        G4.xi(5)
    with pytest.raises(CarrierError):
        G4.eps()


def test_rational_coefficients():
    t = 1 + x1 * x2 * (ScalarA(1) / 2)
    assert power_za(t, 2) == 1 + x1 * x2
