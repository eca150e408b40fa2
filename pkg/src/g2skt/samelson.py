"""The Samelson complex structure on g2 and its integrability checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .algebra import DIM, AlgebraElement, BracketTable, basis_element
from .g2 import g2_bracket_table
from .linalg import matmul
from .roots import change_of_basis
from .scalars import I, ONE, ZERO, FieldElement

__all__ = [
    "ComplexStructure",
    "build_samelson",
    "nijenhuis",
    "check_killing_compatible",
    "complex_action_diagonal",
]

Matrix14 = tuple[tuple[FieldElement, ...], ...]


@dataclass(frozen=True)
class ComplexStructure:
    """Linear map on b-coordinates; column j holds the coordinates of J b_j."""

    matrix: Matrix14

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        m = self.matrix
        return AlgebraElement(
            sum((m[r][c] * x.coeffs[c] for c in range(DIM) if m[r][c] and x.coeffs[c]), ZERO) for r in range(DIM)
        )

    __call__ = apply

    def image(self, k: int) -> dict[int, FieldElement]:
        """``J b_k`` as ``{index: coefficient}``."""
        return {r + 1: self.matrix[r][k - 1] for r in range(DIM) if self.matrix[r][k - 1]}

    def squared(self) -> Matrix14:
        return tuple(map(tuple, matmul(self.matrix, self.matrix)))

    def squares_to_minus_identity(self) -> bool:
        sq = self.squared()
        return all(sq[r][c] == (-1 if r == c else 0) for r in range(DIM) for c in range(DIM))

    def is_real(self) -> bool:
        return all(v.is_real() for row in self.matrix for v in row)


def complex_action_diagonal() -> tuple[list[list[FieldElement]], ...]:
    """J on complex coordinates: H1 -> H2, H2 -> -H1, E_j -> i E_j, E_j-bar -> -i E_j-bar."""
    jc = [[ZERO] * DIM for _ in range(DIM)]
    jc[1][0] = ONE
    jc[0][1] = -ONE
    for j in range(6):
        jc[2 + j][2 + j] = I
        jc[8 + j][8 + j] = -I
    return jc


@cache
def build_samelson() -> ComplexStructure:
    """Pull the complex-basis definition back to the real basis b1..b14."""
    to_c, from_c = change_of_basis()
    m = matmul(matmul(from_c, complex_action_diagonal()), to_c)
    J = ComplexStructure(tuple(tuple(FieldElement(0) + v for v in row) for row in m))
    if not J.is_real():
        raise ArithmeticError("Samelson structure failed to preserve the real form")
    return J


def nijenhuis(J: ComplexStructure, X: AlgebraElement, Y: AlgebraElement, table: BracketTable | None = None) -> AlgebraElement:
    """``N(X, Y) = J[JX, Y] + J[X, JY] + [X, Y] - [JX, JY]``."""
    t = table or g2_bracket_table()
    JX, JY = J(X), J(Y)
    return J(t.bracket(JX, Y)) + J(t.bracket(X, JY)) + t.bracket(X, Y) - t.bracket(JX, JY)


def check_killing_compatible(J: ComplexStructure, table: BracketTable | None = None, indices=None) -> bool:
    """``K(J b_i, J b_j) == K(b_i, b_j)`` for all pairs drawn from ``indices`` (default all 14)."""
    t = table or g2_bracket_table()
    idx = list(indices) if indices is not None else list(range(1, DIM + 1))
    images = {k: J(basis_element(k)) for k in idx}
    for a, i in enumerate(idx):
        for j in idx[a:]:
            if t.killing_form(images[i], images[j]) != t.killing_form(basis_element(i), basis_element(j)):
                return False
    return True
