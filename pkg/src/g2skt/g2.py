"""The Lie algebra g2 inside so(7), built from the defining 3-form on R^7.

Indices on R^7 and on the g2 basis are 1-based throughout.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .algebra import DIM, AlgebraElement, BracketTable
from .linalg import nullspace, rank, rref
from .scalars import ZERO, FieldElement, as_field

__all__ = [
    "Vector7",
    "FormR7",
    "Matrix7",
    "G2Basis",
    "ClosureError",
    "unit_vector",
    "inner",
    "build_phi",
    "wedge_r7",
    "interior_product",
    "evaluate_form",
    "phi_contraction_scalar",
    "cross",
    "elementary",
    "g2_membership",
    "membership_constraint_rows",
    "skew_constraint_rows",
    "linearized_invariance_rows",
    "build_g2_basis",
    "bracket_matrices",
    "coordinates_in_basis",
    "structure_constants",
    "g2_bracket_table",
    "killing_form",
    "solution_space_dimension",
    "linearized_solution_space",
    "MU0",
]

Vector7 = tuple[FieldElement, ...]
Matrix7 = tuple[tuple[FieldElement, ...], ...]


class ClosureError(ArithmeticError):
    """A commutator did not expand in the supplied basis."""


def unit_vector(i: int) -> Vector7:
    return tuple(FieldElement(1 if k == i else 0) for k in range(1, 8))


def vector(values: Iterable) -> Vector7:
    v = tuple(as_field(x) for x in values)
    if len(v) != 7:
        raise ValueError("Vector7 needs exactly 7 components")
    return v


def inner(u: Vector7, v: Vector7) -> FieldElement:
    s = ZERO
    for a, b in zip(u, v):
        s = s + a * b
    return s


def _sort_sign(idx: Sequence[int]) -> tuple[tuple[int, ...] | None, int]:
    """Sort an index tuple, returning the permutation sign (None on repeats)."""
    if len(set(idx)) < len(idx):
        return None, 0
    arr = list(idx)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return tuple(arr), sign


@dataclass(frozen=True)
class FormR7:
    """Alternating k-form on R^7 stored over increasing index tuples."""

    degree: int
    terms: Mapping[tuple[int, ...], FieldElement]

    def __post_init__(self):
        if not 0 <= self.degree <= 7:
            raise ValueError(f"degree must lie in 0..7, got {self.degree}")
        clean = {}
        for key, c in self.terms.items():
            key = tuple(key)
            if len(key) != self.degree or list(key) != sorted(set(key)) or not all(1 <= k <= 7 for k in key):
                raise ValueError(f"bad index tuple {key} for a {self.degree}-form")
            c = as_field(c)
            if c:
                clean[key] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_unsorted(cls, degree: int, terms: Iterable[tuple[Sequence[int], object]]) -> FormR7:
        acc: dict[tuple[int, ...], FieldElement] = {}
        for idx, c in terms:
            key, sign = _sort_sign(idx)
            if key is None:
                continue
            acc[key] = acc.get(key, ZERO) + sign * as_field(c)
        return cls(degree, acc)

    def coefficient(self, idx: Sequence[int]) -> FieldElement:
        key, sign = _sort_sign(idx)
        if key is None:
            return ZERO
        return sign * self.terms.get(key, ZERO)

    def __add__(self, other: FormR7) -> FormR7:
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, ZERO) + c
        return FormR7(self.degree, acc)

    def __mul__(self, s) -> FormR7:
        s = as_field(s)
        return FormR7(self.degree, {k: s * c for k, c in self.terms.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms


@cache
def build_phi() -> FormR7:
    return FormR7(
        3,
        {
            (1, 4, 7): 1,
            (2, 5, 7): 1,
            (3, 6, 7): 1,
            (1, 2, 3): 1,
            (1, 5, 6): -1,
            (2, 4, 6): 1,
            (3, 4, 5): -1,
        },
    )


MU0 = FormR7(7, {(1, 2, 3, 4, 5, 6, 7): 1})


def wedge_r7(alpha: FormR7, beta: FormR7) -> FormR7:
    deg = alpha.degree + beta.degree
    if deg > 7:
        raise ValueError(f"wedge degree {deg} exceeds 7")
    out = []
    for ka, ca in alpha.terms.items():
        for kb, cb in beta.terms.items():
            out.append((ka + kb, ca * cb))
    return FormR7.from_unsorted(deg, out)


def interior_product(u: Vector7, alpha: FormR7) -> FormR7:
    """Contraction into the first slot: ``(i_u alpha)(...) = alpha(u, ...)``."""
    if alpha.degree < 1:
        raise ValueError("interior product of a 0-form is undefined")
    out = []
    for key, c in alpha.terms.items():
        for pos, idx in enumerate(key):
            ui = u[idx - 1]
            if ui:
                rest = key[:pos] + key[pos + 1:]
                out.append((rest, (-1) ** pos * c * ui))
    return FormR7.from_unsorted(alpha.degree - 1, out)


def evaluate_form(alpha: FormR7, vectors: Sequence[Vector7]) -> FieldElement:
    """``alpha(v1, ..., vk)`` with the determinant normalization ``e^{1..k}(e1..ek) = 1``."""
    if len(vectors) != alpha.degree:
        raise ValueError("wrong number of arguments")
    total = ZERO
    for key, c in alpha.terms.items():
        for perm in itertools.permutations(range(alpha.degree)):
            _, sign = _sort_sign(perm)
            prod = FieldElement(sign)
            for slot, p in enumerate(perm):
                x = vectors[slot][key[p] - 1]
                if not x:
                    prod = ZERO
                    break
                prod = prod * x
            if prod:
                total = total + c * prod
    return total


def phi_contraction_scalar(u: Vector7, v: Vector7) -> FieldElement:
    """The scalar s with ``(i_u phi) ^ (i_v phi) ^ phi = s * mu0``."""
    phi = build_phi()
    top = wedge_r7(wedge_r7(interior_product(u, phi), interior_product(v, phi)), phi)
    return top.coefficient((1, 2, 3, 4, 5, 6, 7))


def cross(u: Vector7, v: Vector7) -> Vector7:
    """Seven-dimensional cross product: ``<u x v, w> = phi(u, v, w)``."""
    one_form = interior_product(v, interior_product(u, build_phi()))
    return tuple(one_form.coefficient((k,)) for k in range(1, 8))


# -- so(7) and the membership constraints -----------------------------------


def matrix7(rows: Iterable[Iterable]) -> Matrix7:
    m = tuple(tuple(as_field(x) for x in r) for r in rows)
    if len(m) != 7 or any(len(r) != 7 for r in m):
        raise ValueError("Matrix7 must be 7x7")
    return m


def zero_matrix7() -> Matrix7:
    return tuple(tuple(ZERO for _ in range(7)) for _ in range(7))


def elementary(i: int, j: int) -> Matrix7:
    """``E_ij``: +1 at (i, j), -1 at (j, i)."""
    rows = [[0] * 7 for _ in range(7)]
    rows[i - 1][j - 1] = 1
    rows[j - 1][i - 1] = -1
    return matrix7(rows)


def mat_add(X: Matrix7, Y: Matrix7, sy: int = 1) -> Matrix7:
    return tuple(tuple(a + sy * b for a, b in zip(rx, ry)) for rx, ry in zip(X, Y))


def mat_scale(s, X: Matrix7) -> Matrix7:
    s = as_field(s)
    return tuple(tuple(s * a for a in r) for r in X)


def mat_mul(X: Matrix7, Y: Matrix7) -> Matrix7:
    out = []
    for i in range(7):
        row = []
        for k in range(7):
            s = ZERO
            for j in range(7):
                if X[i][j] and Y[j][k]:
                    s = s + X[i][j] * Y[j][k]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(X: Matrix7, u: Vector7) -> Vector7:
    return tuple(inner(row, u) for row in X)


# Each constraint lhs = rhs is stored as {(i, j): coefficient} for lhs - rhs = 0.
_CONSTRAINTS: tuple[dict[tuple[int, int], int], ...] = (
    {(7, 6): 1, (5, 4): -1, (1, 2): -1},
    {(6, 1): 1, (7, 2): -1, (3, 4): 1},
    {(6, 2): 1, (5, 3): -1, (1, 7): -1},
    {(1, 4): 1, (6, 3): -1, (5, 2): -1},
    {(5, 1): 1, (4, 2): -1, (3, 7): -1},
    {(6, 4): 1, (3, 1): -1, (7, 5): 1},
    {(7, 4): 1, (2, 3): -1, (5, 6): 1},
)

_UPPER = [(i, j) for i in range(1, 8) for j in range(i + 1, 8)]


def membership_constraint_rows() -> list[dict[int, Fraction]]:
    """The seven linear relations as rows over the 21 upper-triangle entries ``X_ij, i<j``."""
    col = {p: n for n, p in enumerate(_UPPER)}
    rows = []
    for con in _CONSTRAINTS:
        row: dict[int, Fraction] = {}
        for (i, j), c in con.items():
            # X_ji = -X_ij for a skew matrix
            key, sign = ((i, j), 1) if i < j else ((j, i), -1)
            row[col[key]] = row.get(col[key], Fraction(0)) + sign * c
        rows.append(row)
    return rows


def _full_index(i: int, j: int) -> int:
    return (i - 1) * 7 + (j - 1)


def skew_constraint_rows() -> list[dict[int, Fraction]]:
    """Skew-symmetry plus the seven relations, as rows over all 49 entries of X."""
    rows: list[dict[int, Fraction]] = []
    for i in range(1, 8):
        for j in range(i, 8):
            if i == j:
                rows.append({_full_index(i, i): Fraction(1)})
            else:
                rows.append({_full_index(i, j): Fraction(1), _full_index(j, i): Fraction(1)})
    for con in _CONSTRAINTS:
        row: dict[int, Fraction] = {}
        for (i, j), c in con.items():
            row[_full_index(i, j)] = row.get(_full_index(i, j), Fraction(0)) + c
        rows.append(row)
    return rows


def linearized_invariance_rows() -> list[dict[int, Fraction]]:
    """Rows (one per e^{ijk}) of ``d/dt exp(tX)^* phi |_{t=0} = 0`` over the 49 entries of X.

    The derivative is ``phi(X.,.,.) + phi(.,X.,.) + phi(.,.,X.)``; entry
    ``X_ab`` sends ``e_b`` to ``e_a``.
    """
    phi = build_phi()
    rows = []
    for key in itertools.combinations(range(1, 8), 3):
        row: dict[int, Fraction] = {}
        for slot in range(3):
            b = key[slot]
            for a in range(1, 8):
                idx = list(key)
                idx[slot] = a
                c = phi.coefficient(idx)
                if c:
                    col = _full_index(a, b)
                    row[col] = row.get(col, Fraction(0)) + c.to_fraction()
        rows.append({k: v for k, v in row.items() if v})
    return rows


def g2_membership(X: Matrix7) -> bool:
    for i in range(7):
        for j in range(7):
            if X[i][j] != -X[j][i]:
                return False

    def x(i, j):
        return X[i - 1][j - 1]

    for con in _CONSTRAINTS:
        s = ZERO
        for (i, j), c in con.items():
            s = s + c * x(i, j)
        if s:
            return False
    return True


@dataclass(frozen=True)
class G2Basis:
    elements: tuple[Matrix7, ...]

    def __post_init__(self):
        if len(self.elements) != DIM:
            raise ValueError(f"G2Basis needs {DIM} matrices")

    def __getitem__(self, k: int) -> Matrix7:
        """1-based access: ``basis[1]`` is b1."""
        if not 1 <= k <= DIM:
            raise IndexError(k)
        return self.elements[k - 1]

    def flat_rows(self) -> list[dict[int, Fraction]]:
        """Each basis matrix as a sparse row over the 21 upper-triangle entries."""
        rows = []
        for m in self.elements:
            rows.append({n: m[i - 1][j - 1].to_fraction() for n, (i, j) in enumerate(_UPPER) if m[i - 1][j - 1]})
        return rows

    def is_independent(self) -> bool:
        return rank(self.flat_rows()) == DIM


_BASIS_SPEC: tuple[tuple[tuple[int, int, int], ...], ...] = (
    ((1, 1, 2), (-1, 6, 7)),
    ((1, 1, 3), (1, 4, 6)),
    ((1, 1, 7), (-1, 2, 6)),
    ((1, 2, 3), (-1, 4, 7)),
    ((1, 2, 4), (1, 1, 5)),
    ((1, 2, 5), (-1, 1, 4)),
    ((1, 2, 7), (1, 1, 6)),
    ((1, 3, 4), (1, 1, 6)),
    ((1, 3, 5), (1, 2, 6)),
    ((1, 3, 6), (-1, 1, 4)),
    ((1, 3, 7), (-1, 1, 5)),
    ((1, 4, 5), (1, 6, 7)),
    ((1, 5, 6), (1, 4, 7)),
    ((1, 5, 7), (-1, 4, 6)),
)


@cache
def build_g2_basis() -> G2Basis:
    mats = []
    for spec in _BASIS_SPEC:
        m = zero_matrix7()
        for sign, i, j in spec:
            m = mat_add(m, elementary(i, j), sign)
        mats.append(m)
    return G2Basis(tuple(mats))


def bracket_matrices(X: Matrix7, Y: Matrix7) -> Matrix7:
    return mat_add(mat_mul(X, Y), mat_mul(Y, X), -1)


def coordinates_in_basis(X: Matrix7, basis: G2Basis) -> dict[int, Fraction]:
    """Expand a matrix in the basis; raises :class:`ClosureError` if it is not in the span."""
    rows = []
    # one equation per upper-triangle entry: sum_k x_k b_k[i][j] = X[i][j]
    for (i, j) in _UPPER:
        row = {}
        for k, m in enumerate(basis.elements):
            if m[i - 1][j - 1]:
                row[k] = m[i - 1][j - 1].to_fraction()
        rhs = X[i - 1][j - 1]
        if rhs:
            row[DIM] = rhs.to_fraction()
        rows.append(row)
    for i in range(7):
        for j in range(7):
            if X[i][j] != -X[j][i]:
                raise ClosureError("matrix is not skew-symmetric")
    red = rref(rows, list(range(DIM + 1)))
    if any(c == DIM for c, _ in red):
        raise ClosureError("matrix is not in the span of the basis")
    if len(red) != DIM:
        raise ClosureError("basis is not linearly independent")
    return {c + 1: r.get(DIM, Fraction(0)) for c, r in red if r.get(DIM)}


def structure_constants(basis: G2Basis) -> BracketTable:
    consts = {}
    for i in range(1, DIM + 1):
        for j in range(i + 1, DIM + 1):
            consts[(i, j)] = coordinates_in_basis(bracket_matrices(basis[i], basis[j]), basis)
    return BracketTable(consts)


@cache
def g2_bracket_table() -> BracketTable:
    """Structure constants of the standard basis, computed once."""
    return structure_constants(build_g2_basis())


def killing_form(x: AlgebraElement, y: AlgebraElement, table: BracketTable | None = None) -> FieldElement:
    return (table or g2_bracket_table()).killing_form(x, y)


def solution_space_dimension() -> int:
    """Dimension of the skew matrices satisfying the seven relations."""
    return len(_UPPER) - rank(membership_constraint_rows())


def linearized_solution_space() -> list[list]:
    return nullspace(linearized_invariance_rows(), 49)
