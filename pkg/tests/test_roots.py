import pytest
from hypothesis import given
from hypothesis import strategies as st

from superchevalley import roots as R
from superchevalley.roots import (
    CartanElement, Root, RootError, all_roots, bilinear_form, coroot, even_coroot_coefficients,
    pairing, pairing_h, root_string,
)
from superchevalley.scalars import A, ONE_PLUS_A, ScalarA

ROOTS = all_roots()


def test_counts_and_order():
    assert len(ROOTS) == 14
    assert sum(r.is_even for r in ROOTS) == 6
    assert sum(r.is_positive for r in ROOTS) == 7
    blocks = [R.even_positive(), R.even_negative(), R.odd_positive(), R.odd_negative()]
    assert [len(b) for b in blocks] == [3, 3, 4, 4]
    assert all(list(b) == sorted(b) for b in blocks)


def test_not_a_root():
    with pytest.raises(RootError):
        Root((2, 2, 0))


def test_simple_roots_and_names():
    assert [Root(r).name() for r in R.SIMPLE_ROOTS] == ["a1", "a2", "a3"]
    assert Root((2, 0, 0)).name() == "2a1+a2+a3"
    assert Root((-1, -1, -1)).name() == "-a1-a2-a3"


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_simple_coordinates_roundtrip(n1, n2, n3):
    assert R.simple_root_coords(R.from_simple_coords((n1, n2, n3))) == (n1, n2, n3)


@pytest.mark.parametrize("beta", ROOTS, ids=str)
@pytest.mark.parametrize("i", [1, 2, 3])
def test_pairing_matches_cartan_matrix(beta, i):
    # epsilon formula on h_i versus the Cartan matrix on simple-root coordinates
    h = [0, 0, 0]
    h[i - 1] = 1
    assert pairing(beta, CartanElement.from_h(h)) == pairing_h(beta, i)


def test_h_basis_change_roundtrip():
    for i in (1, 2, 3):
        H = CartanElement.basis(i)
        assert CartanElement.from_h(H.to_h()) == H
    assert CartanElement.from_h((0, 1, 0)) == CartanElement((2, -ONE_PLUS_A, -A))


@pytest.mark.parametrize("alpha", ROOTS, ids=str)
def test_coroots_against_bilinear_form(alpha):
    # independent oracle: the invariant form determines every coroot pairing
    H = coroot(alpha)
    for beta in ROOTS:
        if alpha.is_even:
            assert pairing(beta, H) * bilinear_form(alpha, alpha) == bilinear_form(beta, alpha) * 2
        else:
            assert pairing(beta, H) == -bilinear_form(beta, alpha)


def test_coroot_examples():
    assert coroot(Root((2, 0, 0))) == CartanElement.basis(2)
    assert coroot(Root((0, 2, 0))) == CartanElement((2, -ONE_PLUS_A, -A))
    assert coroot(Root((1, -1, -1))) == CartanElement.basis(1)
    assert coroot(Root((-1, 1, 1))) == -CartanElement.basis(1)
    assert all(pairing(a, coroot(a)) == 2 for a in ROOTS if a.is_even)
    assert all(pairing(g, coroot(g)) == 0 for g in ROOTS if g.is_odd)
    assert all(bilinear_form(g, g) == 0 for g in ROOTS if g.is_odd)


def test_even_coroot_lattice():
    assert even_coroot_coefficients(coroot(Root((0, 2, 0)))) == (0, 1, 0)
    assert even_coroot_coefficients(CartanElement.basis(1)) is None
    for a in R.even_positive():
        assert coroot(a).in_h0_Z()


def test_weights_on_even_coroots_are_small_integers():
    H = coroot(Root((0, 2, 0)))
    assert {pairing(b, H) for b in ROOTS} <= {ScalarA(k) for k in (-2, -1, 0, 1, 2)}


def test_root_strings():
    s = root_string(Root((1, -1, -1)), Root((0, 2, 0)))
    assert (s.r, s.q) == (0, 1)
    assert s.members() == [(1, -1, -1), (1, 1, -1)]
    for g in ROOTS:
        for a in ROOTS:
            if g.is_odd and a.is_even:
                s = root_string(g, a)
                assert s.r + s.q <= 1
