"""The Lie superalgebra g = D(2,1;a) in its Chevalley basis.

Basis order (17 vectors, even part first): ``H1, H2, H3``, then root vectors
``X_alpha`` for alpha in ``roots.all_roots()`` (even positive, even negative,
odd positive, odd negative).

The bracket table is assembled from the generator relations and the explicit
list of brackets among the root vectors ``e1, e2, e3, e12, e13, e123,
e'1123, f1, f2, f3, f21, f31, f321, f'3211``; afterwards the two long root
vectors are rescaled, ``E = e'1123/(1+a)`` and ``F = -f'3211/(1+a)``.  Any
entry determined twice with different values aborts construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from . import roots as R
from .roots import CartanElement, Root, all_roots, bilinear_form, coroot, pairing, root_string
from .scalars import (
    A, ONE, ONE_PLUS_A, ZERO, Rational, ScalarA, as_scalar, in_Z_bracket_a, join_terms, render_term,
    specialize,
)

DIM = 17
N_CARTAN = 3


class ConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class BasisVector:
    """Either ``Cartan(i)`` (``cartan = i``) or ``RootVec(root)``."""

    cartan: int | None = None
    root: Root | None = None

    @property
    def parity(self) -> int:
        return 0 if self.root is None else self.root.parity

    @property
    def index(self) -> int:
        return BASIS_INDEX[self]

    def name(self) -> str:
        if self.cartan is not None:
            return f"H{self.cartan}"
        if self.root.is_positive:
            return f"E({self.root.name()})"
        return f"F({(-self.root).name()})"

    def __str__(self) -> str:
        return self.name()


BASIS: tuple[BasisVector, ...] = tuple(
    [BasisVector(cartan=i) for i in (1, 2, 3)] + [BasisVector(root=r) for r in all_roots()]
)
BASIS_INDEX: dict[BasisVector, int] = {b: i for i, b in enumerate(BASIS)}
ROOT_INDEX: dict[tuple[int, int, int], int] = {b.root.coords: i for i, b in enumerate(BASIS) if b.root}
PARITY: tuple[int, ...] = tuple(b.parity for b in BASIS)
EVEN_INDICES = tuple(i for i in range(DIM) if PARITY[i] == 0)
ODD_INDICES = tuple(i for i in range(DIM) if PARITY[i] == 1)


def cartan_vector(i: int) -> BasisVector:
    return BASIS[i - 1]


def root_vector(alpha: Root | tuple) -> BasisVector:
    w = alpha.coords if isinstance(alpha, Root) else tuple(alpha)
    return BASIS[ROOT_INDEX[w]]


def weight_of(index: int) -> tuple[int, int, int]:
    b = BASIS[index]
    return (0, 0, 0) if b.root is None else b.root.coords


# names used by the generator presentation
INDEX_NAMES: dict[str, tuple[int, int, int]] = {
    "e1": (1, -1, -1), "e2": (0, 2, 0), "e3": (0, 0, 2),
    "e12": (1, 1, -1), "e13": (1, -1, 1), "e123": (1, 1, 1), "e1123": (2, 0, 0),
    "f1": (-1, 1, 1), "f2": (0, -2, 0), "f3": (0, 0, -2),
    "f21": (-1, -1, 1), "f31": (-1, 1, -1), "f321": (-1, -1, -1), "f3211": (-2, 0, 0),
}


# ---------------------------------------------------------------------------
# vectors


class SuperVector:
    """Finite-support element of g over ScalarA, keyed by basis index."""

    __slots__ = ("coords",)

    def __init__(self, coords: Mapping[int, ScalarA] | None = None):
        self.coords: dict[int, ScalarA] = {i: as_scalar(c) for i, c in (coords or {}).items() if c}

    @classmethod
    def basis(cls, b: BasisVector | int) -> "SuperVector":
        i = b if isinstance(b, int) else b.index
        return cls({i: ONE})

    @classmethod
    def cartan(cls, H: CartanElement) -> "SuperVector":
        return cls({i: z for i, z in enumerate(H.coords)})

    def __add__(self, other: "SuperVector") -> "SuperVector":
        out = dict(self.coords)
        for i, c in other.coords.items():
            out[i] = out.get(i, ZERO) + c
        return SuperVector(out)

    def __neg__(self) -> "SuperVector":
        return SuperVector({i: -c for i, c in self.coords.items()})

    def __sub__(self, other: "SuperVector") -> "SuperVector":
        return self + (-other)

    def __mul__(self, s) -> "SuperVector":
        s = as_scalar(s)
        return SuperVector({i: c * s for i, c in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def is_zero(self) -> bool:
        return not self.coords

    def even_part(self) -> "SuperVector":
        return SuperVector({i: c for i, c in self.coords.items() if PARITY[i] == 0})

    def odd_part(self) -> "SuperVector":
        return SuperVector({i: c for i, c in self.coords.items() if PARITY[i] == 1})

    def parity(self) -> int | None:
        ps = {PARITY[i] for i in self.coords}
        return ps.pop() if len(ps) == 1 else (0 if not ps else None)

    def cartan_part(self) -> CartanElement:
        return CartanElement(self.coords.get(i, ZERO) for i in range(3))

    def map(self, f) -> "SuperVector":
        return SuperVector({i: f(c) for i, c in self.coords.items()})

    def render(self) -> str:
        return join_terms([render_term(self.coords[i], BASIS[i].name()) for i in sorted(self.coords)])

    def __repr__(self) -> str:
        return f"SuperVector({self.render()})"


# ---------------------------------------------------------------------------
# structure table


def _h(x1=ZERO, x2=ZERO, x3=ZERO) -> dict:
    """A Cartan element given in the h-basis, as a symbolic right-hand side."""
    return {"h": (as_scalar(x1), as_scalar(x2), as_scalar(x3))}


# Brackets among root vectors as printed (primed long root vectors "Ep"/"Fp").
_RAW_BRACKETS: list[tuple[str, str, dict]] = [
    ("e1", "e2", {"e12": ONE}), ("e1", "e3", {"e13": ONE}), ("e1", "e123", {"Ep": ONE}),
    ("e1", "f21", {"f2": ONE}), ("e1", "f31", {"f3": A}), ("e1", "Fp", {"f321": -ONE_PLUS_A}),
    ("e2", "e13", {"e123": -ONE}), ("e2", "f21", {"f1": ONE}), ("e2", "f321", {"f31": ONE}),
    ("e3", "e12", {"e123": -ONE}), ("e3", "f31", {"f1": ONE}), ("e3", "f321", {"f21": ONE}),
    ("f1", "f2", {"f21": -ONE}), ("f1", "f3", {"f31": -ONE}), ("f1", "f321", {"Fp": ONE}),
    ("f1", "e12", {"e2": ONE}), ("f1", "e13", {"e3": A}), ("f1", "Ep", {"e123": ONE_PLUS_A}),
    ("f2", "f31", {"f321": ONE}), ("f2", "e12", {"e1": -ONE}), ("f2", "e123", {"e13": -ONE}),
    ("f3", "f21", {"f321": ONE}), ("f3", "e13", {"e1": -ONE}), ("f3", "e123", {"e12": -ONE}),
    ("e12", "e13", {"Ep": -ONE}), ("e12", "f21", _h(1, -1)),
    ("e12", "f321", {"f3": A}), ("e12", "Fp", {"f31": ONE_PLUS_A}),
    ("e13", "f31", _h(1, 0, -A)), ("e13", "f321", {"f2": ONE}), ("e13", "Fp", {"f21": ONE_PLUS_A}),
    ("f21", "f31", {"Fp": -ONE}), ("f21", "e123", {"e3": A}), ("f21", "Ep", {"e13": -ONE_PLUS_A}),
    ("f31", "e123", {"e2": ONE}), ("f31", "Ep", {"e12": -ONE_PLUS_A}),
    ("e123", "f321", _h(1, -1, -A)), ("e123", "Fp", {"f1": -ONE_PLUS_A}),
    ("f321", "Ep", {"e1": ONE_PLUS_A}),
    ("Ep", "Fp", _h(-2 * ONE_PLUS_A, ONE_PLUS_A, A * ONE_PLUS_A)),
]

# The list prints [f321, e'1123] = -(1+a) e1.  That sign breaks super-Jacobi
# (e.g. on (e3, e'1123, f321)); expanding e'1123 = [e1, e123] gives +(1+a) e1.
PRINTED_ENTRIES: dict[tuple[str, str], dict] = {("f321", "Ep"): {"e1": -ONE_PLUS_A}}

# relations and definitions of the composite root vectors
_DEFINING_BRACKETS: list[tuple[str, str, dict]] = [
    ("e1", "f1", _h(1)), ("e2", "f2", _h(0, 1)), ("e3", "f3", _h(0, 0, 1)),
    ("e1", "f2", {}), ("e1", "f3", {}), ("e2", "f1", {}), ("e2", "f3", {}),
    ("e3", "f1", {}), ("e3", "f2", {}),
    ("e1", "e1", {}), ("f1", "f1", {}),
    ("e1", "e2", {"e12": ONE}), ("e1", "e3", {"e13": ONE}), ("e12", "e3", {"e123": ONE}),
    ("e1", "e123", {"Ep": ONE}),
    ("f2", "f1", {"f21": ONE}), ("f3", "f1", {"f31": ONE}), ("f3", "f21", {"f321": ONE}),
    ("f321", "f1", {"Fp": ONE}),
]

# primed vector = factor * rescaled vector
_RESCALE = {"Ep": ("e1123", ONE_PLUS_A), "Fp": ("f3211", -ONE_PLUS_A)}


def _name_index(name: str) -> int:
    return ROOT_INDEX[INDEX_NAMES[name]]


def _resolve_rhs(rhs: dict) -> dict[int, ScalarA]:
    out: dict[int, ScalarA] = {}
    for key, c in rhs.items():
        if key == "h":
            H = CartanElement.from_h(c)
            for i, z in enumerate(H.coords):
                if z:
                    out[i] = out.get(i, ZERO) + z
        elif key in _RESCALE:
            name, factor = _RESCALE[key]
            idx = _name_index(name)
            out[idx] = out.get(idx, ZERO) + c * factor
        else:
            idx = _name_index(key)
            out[idx] = out.get(idx, ZERO) + c
    return {i: c for i, c in out.items() if c}


def _resolve_lhs(name: str) -> tuple[int, ScalarA]:
    """Basis index of a printed name and the factor ``printed = factor * basis``."""
    if name in _RESCALE:
        base, factor = _RESCALE[name]
        return _name_index(base), factor
    return _name_index(name), ONE


def super_sign(i: int, j: int) -> int:
    return -1 if PARITY[i] and PARITY[j] else 1


@dataclass
class StructureTable:
    """All 289 brackets ``[b_i, b_j]`` as sparse coefficient maps."""

    entries: dict[tuple[int, int], dict[int, ScalarA]]
    a0: Fraction | None = None
    sources: dict[tuple[int, int], str] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> dict[int, ScalarA]:
        return self.entries[key]

    def bracket_basis(self, i: int, j: int) -> SuperVector:
        return SuperVector(self.entries[(i, j)])

    def scalar(self, s: ScalarA) -> ScalarA:
        """Scalars as seen by this table: specialized when ``a0`` is set."""
        if self.a0 is None:
            return s
        return ScalarA(specialize(s, self.a0))

    def structure_constants(self) -> Iterator[ScalarA]:
        for v in self.entries.values():
            yield from v.values()

    def to_json(self) -> dict:
        rows = {}
        for (i, j), v in sorted(self.entries.items()):
            if v:
                rows.setdefault(BASIS[i].name(), {})[BASIS[j].name()] = SuperVector(v).render()
        return {
            "schema": 1,
            "a": None if self.a0 is None else str(self.a0),
            "basis": [b.name() for b in BASIS],
            "parity": list(PARITY),
            "brackets": rows,
        }


class _TableBuilder:
    def __init__(self):
        self.entries: dict[tuple[int, int], dict[int, ScalarA]] = {}
        self.sources: dict[tuple[int, int], str] = {}

    def set(self, i: int, j: int, value: dict[int, ScalarA], source: str) -> None:
        value = {k: c for k, c in value.items() if c}
        mirrored = {k: c * (-super_sign(i, j)) for k, c in value.items()}
        for key, val in (((i, j), value), ((j, i), mirrored)):
            old = self.entries.get(key)
            if old is not None and old != val:
                raise ConstructionError(
                    f"[{BASIS[key[0]]}, {BASIS[key[1]]}] forced inconsistently: "
                    f"{SuperVector(old).render()} ({self.sources[key]}) vs "
                    f"{SuperVector(val).render()} ({source})"
                )
            self.entries[key] = val
            self.sources.setdefault(key, source)


@lru_cache(maxsize=None)
def _build_symbolic(as_printed: bool = False) -> StructureTable:
    tb = _TableBuilder()
    raw = _RAW_BRACKETS
    if as_printed:
        raw = [(x, y, PRINTED_ENTRIES.get((x, y), rhs)) for x, y, rhs in raw]
    for group, source in ((_DEFINING_BRACKETS, "relations"), (raw, "bracket list")):
        for x, y, rhs in group:
            i, fx = _resolve_lhs(x)
            j, fy = _resolve_lhs(y)
            value = _resolve_rhs(rhs)
            scale = ONE / (fx * fy)
            tb.set(i, j, {k: c * scale for k, c in value.items()}, source)
    # Cartan rows: [H_i, X_beta] = beta(H_i) X_beta
    for i in range(N_CARTAN):
        H = CartanElement.basis(i + 1)
        for j in range(N_CARTAN):
            tb.set(i, j, {}, "Cartan abelian")
        for j in range(N_CARTAN, DIM):
            tb.set(i, j, {j: pairing(BASIS[j].root, H)}, "Cartan eigenvalue")
    # remaining pairs of root vectors must bracket to zero
    for i in range(N_CARTAN, DIM):
        for j in range(N_CARTAN, DIM):
            if (i, j) in tb.entries:
                continue
            s = R.add(BASIS[i].root.coords, BASIS[j].root.coords)
            if s == (0, 0, 0) or R.is_root(s):
                raise ConstructionError(f"[{BASIS[i]}, {BASIS[j]}] is undetermined")
            tb.set(i, j, {}, "grading")
    return StructureTable(tb.entries, None, tb.sources)


def build_structure_table(a0: Rational | None = None, as_printed: bool = False) -> StructureTable:
    """The bracket table; with ``a0`` all constants are specialized to ``a = a0``.

    ``as_printed=True`` uses the uncorrected sign of ``[f321, e'1123]``.
    """
    sym = _build_symbolic(as_printed)
    if a0 is None:
        return sym
    a0 = Fraction(a0)
    data = {
        key: {k: ScalarA(specialize(c, a0)) for k, c in v.items()}
        for key, v in sym.entries.items()
    }
    return StructureTable({k: {i: c for i, c in v.items() if c} for k, v in data.items()},
                          a0, dict(sym.sources))


def bracket(x: SuperVector, y: SuperVector, table: StructureTable | None = None) -> SuperVector:
    t = table or build_structure_table()
    out: dict[int, ScalarA] = {}
    for i, xi in x.coords.items():
        for j, yj in y.coords.items():
            c = xi * yj
            for k, v in t.entries[(i, j)].items():
                out[k] = out.get(k, ZERO) + c * v
    return SuperVector(out)


def _bracket_index_vec(i: int, y: dict[int, ScalarA], t: StructureTable) -> dict[int, ScalarA]:
    out: dict[int, ScalarA] = {}
    for j, yj in y.items():
        for k, v in t.entries[(i, j)].items():
            out[k] = out.get(k, ZERO) + yj * v
    return {k: c for k, c in out.items() if c}


# ---------------------------------------------------------------------------
# verification


@dataclass
class Report:
    name: str
    checks: int = 0
    violations: list[str] = field(default_factory=list)
    entries: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, cond: bool, message: str) -> None:
        self.checks += 1
        if not cond:
            self.violations.append(message)

    def summary(self) -> str:
        scope = f"{self.entries} entries" if self.entries else f"{self.checks} checks"
        return f"{self.name}: {len(self.violations)} violations / {scope}"

    def to_json(self) -> dict:
        return {"schema": 1, "suite": self.name, "ok": self.ok, "checks": self.checks,
                "entries": self.entries, "violations": self.violations}


def sigma(alpha: Root) -> int:
    return -1 if alpha.is_odd and not alpha.is_positive else 1


def verify_chevalley_axioms(table: StructureTable | None = None) -> Report:
    """Check axioms (a)-(d) of a Chevalley basis on every basis pair."""
    t = table or build_structure_table()
    rep = Report("chevalley-axioms", entries=len(t.entries))
    sc = t.scalar

    # (a) coroots lie in the Z[a]-span of H1..H3, and H1..H3 are coroots up to sign
    for alpha in all_roots():
        rep.check(coroot(alpha).in_h_Za(), f"(a) H_{alpha} not Z[a]-integral")
    coroot_set = {coroot(alpha) for alpha in all_roots()}
    for i in (1, 2, 3):
        rep.check(CartanElement.basis(i) in coroot_set, f"(a) H{i} is not a coroot")

    for i in range(DIM):
        for j in range(DIM):
            got = t.entries[(i, j)]
            bi, bj = BASIS[i], BASIS[j]
            tag = f"[{bi}, {bj}]"
            if bi.root is None and bj.root is None:
                rep.check(not got, f"(b) {tag} = {SuperVector(got).render()} != 0")
                continue
            if bi.root is None:
                want = {j: sc(pairing(bj.root, CartanElement.basis(bi.cartan)))}
                rep.check(got == {k: c for k, c in want.items() if c},
                          f"(b) {tag} = {SuperVector(got).render()}")
                continue
            if bj.root is None:
                continue  # mirrored by antisymmetry; covered by the (b) row above
            alpha, beta = bi.root, bj.root
            if alpha == -beta:
                want = SuperVector.cartan(coroot(alpha)) * sigma(alpha)
                want = want.map(sc)
                rep.check(SuperVector(got) == want,
                          f"(c) {tag} = {SuperVector(got).render()}, expected {want.render()}")
                continue
            s = R.add(alpha.coords, beta.coords)
            if not R.is_root(s):
                rep.check(not got, f"(d.1) {tag} = {SuperVector(got).render()} != 0")
                continue
            k = ROOT_INDEX[s]
            rep.check(set(got) <= {k}, f"(d) {tag} not proportional to X_{Root(s)}")
            c = got.get(k, ZERO)
            iso_a = bilinear_form(alpha, alpha).is_zero()
            iso_b = bilinear_form(beta, beta).is_zero()
            if not (iso_a and iso_b):
                r = root_string(beta, alpha).r
                rep.check(c == r + 1 or c == -(r + 1), f"(d.2) {tag}: c = {c}, r + 1 = {r + 1}")
            else:
                v = sc(pairing(beta, coroot(alpha)))
                rep.check(c == v or c == -v, f"(d.3) {tag}: c = {c}, beta(H_alpha) = {v}")
    return rep


def check_antisymmetry(table: StructureTable | None = None) -> Report:
    t = table or build_structure_table()
    rep = Report("super-antisymmetry", entries=len(t.entries))
    for i in range(DIM):
        for j in range(DIM):
            s = super_sign(i, j)
            lhs = SuperVector(t.entries[(i, j)]) + SuperVector(t.entries[(j, i)]) * s
            rep.check(lhs.is_zero(), f"[{BASIS[i]}, {BASIS[j]}] not super-antisymmetric")
    return rep


def check_jacobi(table: StructureTable | None = None) -> Report:
    """The super-Jacobi identity on all 17**3 ordered basis triples."""
    t = table or build_structure_table()
    rep = Report("super-jacobi", entries=DIM ** 3)
    for x in range(DIM):
        for y in range(DIM):
            for z in range(DIM):
                total: dict[int, ScalarA] = {}
                for (u, v, w) in ((x, y, z), (y, z, x), (z, x, y)):
                    sign = -1 if PARITY[u] and PARITY[w] else 1
                    inner = t.entries[(v, w)]
                    for k, c in _bracket_index_vec(u, inner, t).items():
                        total[k] = total.get(k, ZERO) + c * sign
                bad = {k: c for k, c in total.items() if c}
                rep.check(not bad, f"Jacobi fails on ({BASIS[x]}, {BASIS[y]}, {BASIS[z]})")
    return rep


def check_integrality(table: StructureTable | None = None) -> Report:
    t = table or build_structure_table()
    rep = Report("integrality", entries=len(t.entries))
    for (i, j), v in t.entries.items():
        for k, c in v.items():
            rep.check(in_Z_bracket_a(c), f"[{BASIS[i]}, {BASIS[j]}] has coefficient {c} outside Z[a]")
    return rep


def check_grading(table: StructureTable | None = None) -> Report:
    t = table or build_structure_table()
    rep = Report("grading", entries=len(t.entries))
    for (i, j), v in t.entries.items():
        w = R.add(weight_of(i), weight_of(j))
        for k in v:
            rep.check(weight_of(k) == w, f"[{BASIS[i]}, {BASIS[j]}] leaves weight space {w}")
    return rep


def structure_constant(alpha: Root, beta: Root, table: StructureTable | None = None) -> ScalarA:
    """``c_{alpha,beta}`` with ``[X_alpha, X_beta] = c X_{alpha+beta}`` (0 if not a root)."""
    t = table or build_structure_table()
    s = R.add(alpha.coords, beta.coords)
    if not R.is_root(s):
        return ZERO
    return t.entries[(ROOT_INDEX[alpha.coords], ROOT_INDEX[beta.coords])].get(ROOT_INDEX[s], ZERO)


# ---------------------------------------------------------------------------
# adjoint module


Matrix = list[list[ScalarA]]


@lru_cache(maxsize=None)
def _adjoint_symbolic(i: int) -> tuple[tuple[ScalarA, ...], ...]:
    t = build_structure_table()
    M = [[ZERO] * DIM for _ in range(DIM)]
    for j in range(DIM):
        for k, c in t.entries[(i, j)].items():
            M[k][j] = c
    return tuple(tuple(row) for row in M)


def adjoint_matrix(x: BasisVector | int | SuperVector) -> Matrix:
    """Matrix of ``ad(x)``; column j holds the coordinates of ``[x, b_j]``."""
    if isinstance(x, SuperVector):
        M = [[ZERO] * DIM for _ in range(DIM)]
        for i, c in x.coords.items():
            Mi = _adjoint_symbolic(i)
            for r in range(DIM):
                for s in range(DIM):
                    if Mi[r][s]:
                        M[r][s] = M[r][s] + c * Mi[r][s]
        return M
    i = x if isinstance(x, int) else x.index
    return [list(row) for row in _adjoint_symbolic(i)]


def adjoint_sparse(i: int) -> dict[int, dict[int, ScalarA]]:
    """Sparse rows of ``ad(b_i)``: ``{row: {col: value}}``."""
    return _adjoint_sparse(i)


@lru_cache(maxsize=None)
def _adjoint_sparse(i: int) -> dict[int, dict[int, ScalarA]]:
    M = _adjoint_symbolic(i)
    out: dict[int, dict[int, ScalarA]] = {}
    for r in range(DIM):
        for s in range(DIM):
            if M[r][s]:
                out.setdefault(r, {})[s] = M[r][s]
    return out


def mat_mul(X: Matrix, Y: Matrix) -> Matrix:
    n = len(X)
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        Xi = X[i]
        Oi = out[i]
        for k in range(n):
            x = Xi[k]
            if x:
                Yk = Y[k]
                for j in range(n):
                    y = Yk[j]
                    if y:
                        Oi[j] = Oi[j] + x * y
    return out


def identity_matrix(n: int = DIM) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def weight_decomposition() -> dict[tuple[int, int, int], list[BasisVector]]:
    out: dict[tuple[int, int, int], list[BasisVector]] = {}
    for i, b in enumerate(BASIS):
        out.setdefault(weight_of(i), []).append(b)
    return out


def check_sl2_triples(table: StructureTable | None = None) -> Report:
    """The three sl2-triples attached to the positive even roots."""
    t = table or build_structure_table()
    rep = Report("sl2-triples")
    for alpha in R.even_positive():
        e = SuperVector.basis(root_vector(alpha))
        f = SuperVector.basis(root_vector(-alpha))
        h = SuperVector.cartan(coroot(alpha)).map(t.scalar)
        rep.check(bracket(e, f, t) == h, f"[e, f] != h for {alpha}")
        rep.check(bracket(h, e, t) == e * 2, f"[h, e] != 2e for {alpha}")
        rep.check(bracket(h, f, t) == f * -2, f"[h, f] != -2f for {alpha}")
    # the three copies of sl2 commute with each other
    triples = [
        [SuperVector.basis(root_vector(al)), SuperVector.basis(root_vector(-al)),
         SuperVector.cartan(coroot(al)).map(t.scalar)]
        for al in R.even_positive()
    ]
    for p in range(3):
        for q in range(p + 1, 3):
            for x in triples[p]:
                for y in triples[q]:
                    rep.check(bracket(x, y, t).is_zero(), f"sl2 copies {p} and {q} do not commute")
    return rep
