import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superchevalley import roots as R
from superchevalley.roots import CartanElement, Root, coroot, pairing
from superchevalley.scalars import A, ONE, ONE_PLUS_A, ScalarA, in_Z_bracket_a
from superchevalley.superalgebra import (
    BASIS, DIM, INDEX_NAMES, ConstructionError, SuperVector, adjoint_matrix, bracket,
    build_structure_table, cartan_vector, check_antisymmetry, check_grading, check_integrality,
    check_jacobi, check_sl2_triples, identity_matrix, mat_mul, root_vector, structure_constant,
    verify_chevalley_axioms, weight_decomposition,
)

T = build_structure_table()


def v(name: str) -> SuperVector:
    return SuperVector.basis(root_vector(INDEX_NAMES[name]))


def H(i: int) -> SuperVector:
    return SuperVector.basis(cartan_vector(i))


def h(x1=0, x2=0, x3=0) -> SuperVector:
    return SuperVector.cartan(CartanElement.from_h((x1, x2, x3)))


def test_basis_shape():
    assert len(BASIS) == DIM == 17
    assert len(set(BASIS)) == 17
    assert sum(b.parity for b in BASIS) == 8


@pytest.mark.parametrize("x,y,want", [
    ("e1", "e2", lambda: v("e12")),
    ("f1", "e13", lambda: v("e3") * A),
    ("e123", "f321", lambda: h(1, -1, -A)),
    ("e2", "e13", lambda: -v("e123")),
    ("e1", "f1", lambda: H(1)),
    ("f1", "e1", lambda: H(1)),
    ("e1", "e123", lambda: v("e1123") * ONE_PLUS_A),
    ("e1123", "f3211", lambda: H(2)),
])
def test_listed_brackets(x, y, want):
    assert bracket(v(x), v(y)) == want()


def test_h_coordinates_of_listed_coroot():
    assert h(1, -1, -A) == SuperVector.cartan(CartanElement((-1, ONE_PLUS_A, 0)))


def test_cartan_brackets():
    assert bracket(H(1), H(2)).is_zero()
    assert bracket(v("e1"), v("e1")).is_zero()
    # [h_i, e_j] = a_ij e_j
    for i in (1, 2, 3):
        for j, name in enumerate(("e1", "e2", "e3")):
            hi = h(*[1 if k == i - 1 else 0 for k in range(3)])
            assert bracket(hi, v(name)) == v(name) * R.CARTAN_MATRIX[i - 1][j]


def test_structure_table_suites():
    for rep in (verify_chevalley_axioms(T), check_antisymmetry(T), check_grading(T),
                check_integrality(T), check_sl2_triples(T), check_jacobi(T)):
        assert rep.ok, rep.violations[:5]


def test_isotropic_pair_constant():
    a1, b = Root((1, -1, -1)), Root((1, 1, 1))
    assert structure_constant(a1, b) == ONE_PLUS_A == pairing(b, coroot(a1))


def test_printed_sign_breaks_jacobi():
    printed = build_structure_table(as_printed=True)
    assert verify_chevalley_axioms(printed).ok
    assert not check_jacobi(printed).ok


def test_inconsistent_entry_is_rejected(monkeypatch):
    from superchevalley import superalgebra as S
    raw = list(S._RAW_BRACKETS) + [("e1", "e2", {"e12": -ONE})]
    monkeypatch.setattr(S, "_RAW_BRACKETS", raw)
    S._build_symbolic.cache_clear()
    try:
        with pytest.raises(ConstructionError):
            S._build_symbolic()
    finally:
        monkeypatch.undo()
        S._build_symbolic.cache_clear()


def test_adjoint_matrices():
    M = adjoint_matrix(cartan_vector(1))
    for j in range(DIM):
        for i in range(DIM):
            if i != j:
                assert not M[i][j]
        w = BASIS[j].root
        assert M[j][j] == (pairing(w, CartanElement.basis(1)) if w else 0)
    col = BASIS.index(root_vector((0, 2, 0)))
    assert M[col][col] == 1
    for r in R.all_roots():
        ad = adjoint_matrix(root_vector(r))
        P = identity_matrix()
        for _ in range(4):
            P = mat_mul(P, ad)
        assert all(not c for row in P for c in row)
        assert all(in_Z_bracket_a(c) for row in ad for c in row)


def test_weight_decomposition():
    wd = weight_decomposition()
    assert len(wd) == 15
    assert wd[(0, 0, 0)] == [cartan_vector(i) for i in (1, 2, 3)]
    assert wd[(0, 2, 0)] == [root_vector((0, 2, 0))]


coeffs = st.integers(-3, 3).map(ScalarA)
vectors = st.dictionaries(st.integers(0, 16), coeffs, max_size=4).map(SuperVector)


@settings(max_examples=50)
@given(vectors, vectors, vectors)
def test_bracket_bilinear(x, y, z):
    assert bracket(x + y, z) == bracket(x, z) + bracket(y, z)
    assert bracket(x, y + z) == bracket(x, y) + bracket(x, z)


@settings(max_examples=50)
@given(vectors)
def test_parity_split(x):
    assert x.even_part() + x.odd_part() == x
    assert x.even_part().parity() in (0, None) or x.even_part().is_zero()


def test_specialized_table():
    t = build_structure_table(2)
    assert bracket(v("e1"), v("e123"), t) == v("e1123") * 3
    assert verify_chevalley_axioms(t).ok


def test_json_export():
    data = T.to_json()
    assert data["schema"] == 1
    assert data["brackets"]["E(a1)"]["F(a1)"] == "H1"
