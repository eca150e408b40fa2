"""Elements of a 14-dimensional Lie algebra and its bracket table."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import cached_property

from .scalars import ZERO, FieldElement, as_field

__all__ = ["DIM", "AlgebraElement", "BracketTable", "basis_element"]

DIM = 14


class AlgebraElement:
    """Coefficient vector over ``b1..b14`` (entries may be complex).

    Indexing through :meth:`coeff` is 1-based to match basis labels.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable) -> None:
        c = tuple(as_field(x) for x in coeffs)
        if len(c) != DIM:
            raise ValueError(f"AlgebraElement needs {DIM} coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def zero(cls) -> AlgebraElement:
        return cls([ZERO] * DIM)

    @classmethod
    def from_terms(cls, terms: Mapping[int, object]) -> AlgebraElement:
        c = [ZERO] * DIM
        for k, v in terms.items():
            c[k - 1] = as_field(v)
        return cls(c)

    def coeff(self, k: int) -> FieldElement:
        return self.coeffs[k - 1]

    def terms(self) -> dict[int, FieldElement]:
        return {k + 1: v for k, v in enumerate(self.coeffs) if v}

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return AlgebraElement(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return AlgebraElement(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(-a for a in self.coeffs)

    def __mul__(self, s) -> AlgebraElement:
        if isinstance(s, AlgebraElement):
            return NotImplemented
        s = as_field(s)
        return AlgebraElement(s * a for a in self.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, s) -> AlgebraElement:
        inv = as_field(s).inverse()
        return self * inv

    def conjugate(self) -> AlgebraElement:
        return AlgebraElement(a.conjugate() for a in self.coeffs)

    def is_real(self) -> bool:
        return all(a.is_real() for a in self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        body = " + ".join(f"({v})*b{k}" for k, v in self.terms().items()) or "0"
        return f"AlgebraElement({body})"


def basis_element(k: int) -> AlgebraElement:
    """The basis vector ``b_k`` (1-based)."""
    return AlgebraElement.from_terms({k: 1})


class BracketTable:
    """Exact structure constants ``[b_i, b_j] = sum_k c_ij^k b_k``.

    Only pairs ``i < j`` are stored; antisymmetry supplies the rest.
    """

    def __init__(self, constants: Mapping[tuple[int, int], Mapping[int, Fraction]]) -> None:
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), terms in constants.items():
            if not 1 <= i < j <= DIM:
                raise ValueError(f"bracket key must satisfy 1 <= i < j <= {DIM}: {(i, j)}")
            nz = {k: Fraction(c) for k, c in terms.items() if c}
            if nz:
                table[(i, j)] = nz
        self.constants = table

    def relation(self, i: int, j: int) -> dict[int, Fraction]:
        """Coefficients of ``[b_i, b_j]`` for any ordered pair."""
        if i == j:
            return {}
        if i < j:
            return dict(self.constants.get((i, j), {}))
        return {k: -c for k, c in self.constants.get((j, i), {}).items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, BracketTable):
            return NotImplemented
        return self.constants == other.constants

    @cached_property
    def _dense(self) -> list[list[list[tuple[int, FieldElement]]]]:
        d = [[[] for _ in range(DIM)] for _ in range(DIM)]
        for i in range(1, DIM + 1):
            for j in range(1, DIM + 1):
                d[i - 1][j - 1] = [(k - 1, FieldElement(c)) for k, c in self.relation(i, j).items()]
        return d

    def bracket(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        out = [ZERO] * DIM
        xs = [(i, a) for i, a in enumerate(x.coeffs) if a]
        ys = [(j, b) for j, b in enumerate(y.coeffs) if b]
        dense = self._dense
        for i, a in xs:
            row = dense[i]
            for j, b in ys:
                terms = row[j]
                if terms:
                    ab = a * b
                    for k, c in terms:
                        out[k] = out[k] + ab * c
        return AlgebraElement(out)

    def ad_matrix(self, x: AlgebraElement) -> list[list[FieldElement]]:
        """Matrix of ``ad_x``: column ``j`` holds the coordinates of ``[x, b_j]``."""
        cols = [self.bracket(x, basis_element(j)).coeffs for j in range(1, DIM + 1)]
        return [[cols[j][k] for j in range(DIM)] for k in range(DIM)]

    @cached_property
    def killing_matrix(self) -> list[list[Fraction]]:
        """Gram matrix ``K_ij = tr(ad_{b_i} ad_{b_j})``."""
        ad = []
        for i in range(1, DIM + 1):
            m = [[Fraction(0)] * DIM for _ in range(DIM)]
            for a in range(1, DIM + 1):
                for b, c in self.relation(i, a).items():
                    m[b - 1][a - 1] = c
            ad.append(m)
        K = [[Fraction(0)] * DIM for _ in range(DIM)]
        for i in range(DIM):
            for j in range(i, DIM):
                s = Fraction(0)
                Ai, Aj = ad[i], ad[j]
                for a in range(DIM):
                    for b in range(DIM):
                        if Ai[a][b] and Aj[b][a]:
                            s += Ai[a][b] * Aj[b][a]
                K[i][j] = K[j][i] = s
        return K

    def killing_form(self, x: AlgebraElement, y: AlgebraElement) -> FieldElement:
        """``K(x, y) = tr(ad_x ad_y)``, extended bilinearly (not sesquilinearly)."""
        K = self.killing_matrix
        s = ZERO
        for i, a in enumerate(x.coeffs):
            if not a:
                continue
            for j, b in enumerate(y.coeffs):
                if b and K[i][j]:
                    s = s + a * b * K[i][j]
        return s

    def killing_form_from_ad(self, x: AlgebraElement, y: AlgebraElement) -> FieldElement:
        """Same value as :meth:`killing_form`, computed as a literal trace."""
        ax, ay = self.ad_matrix(x), self.ad_matrix(y)
        s = ZERO
        for a in range(DIM):
            for b in range(DIM):
                if ax[a][b] and ay[b][a]:
                    s = s + ax[a][b] * ay[b][a]
        return s
