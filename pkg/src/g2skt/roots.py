"""Cartan subalgebra span{b1, b12}, root vectors, and the complexified basis.

The complex basis is ordered ``H1, H2, E1..E6, E1bar..E6bar``; label
indices 0..13 follow that order everywhere in the package.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import cache

from .algebra import DIM, AlgebraElement, BracketTable, basis_element
from .g2 import g2_bracket_table
from .linalg import inverse, matmul
from .scalars import I, ONE, SQRT3, ZERO, FieldElement, as_field

__all__ = [
    "LABELS",
    "conjugate_label",
    "label_index",
    "Root",
    "ComplexBasis",
    "ComplexBracketTable",
    "build_complex_basis",
    "verify_root_vector",
    "change_of_basis",
    "to_complex_coords",
    "from_complex_coords",
    "complexified_structure_constants",
    "complex_bracket_table",
    "killing_complex_pairings",
]

LABELS: tuple[str, ...] = ("H1", "H2") + tuple(f"E{j}" for j in range(1, 7)) + tuple(f"E{j}bar" for j in range(1, 7))
_INDEX = {name: k for k, name in enumerate(LABELS)}


def label_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown label {name!r}") from None


def conjugate_label(k: int) -> int:
    """H1, H2 are real; E_j and E_j-bar swap."""
    if k < 2:
        return k
    return k + 6 if k < 8 else k - 6


@dataclass(frozen=True)
class Root:
    """A root, recorded by its (purely imaginary) values on b1 and b12."""

    value_on_b1: FieldElement
    value_on_b12: FieldElement

    def __post_init__(self):
        a, b = as_field(self.value_on_b1), as_field(self.value_on_b12)
        if not (a.is_imaginary() and b.is_imaginary()):
            raise ValueError("root values on a compact Cartan subalgebra are purely imaginary")
        object.__setattr__(self, "value_on_b1", a)
        object.__setattr__(self, "value_on_b12", b)

    def __add__(self, other: Root) -> Root:
        return Root(self.value_on_b1 + other.value_on_b1, self.value_on_b12 + other.value_on_b12)

    def __neg__(self) -> Root:
        return Root(-self.value_on_b1, -self.value_on_b12)

    def is_zero(self) -> bool:
        return not self.value_on_b1 and not self.value_on_b12

    def __call__(self, h: AlgebraElement) -> FieldElement:
        """Evaluate on an element of the complexified Cartan subalgebra."""
        if any(v for k, v in h.terms().items() if k not in (1, 12)):
            raise ValueError("root evaluated outside the Cartan subalgebra")
        return h.coeff(1) * self.value_on_b1 + h.coeff(12) * self.value_on_b12


def _b(k: int) -> AlgebraElement:
    return basis_element(k)


@dataclass(frozen=True)
class ComplexBasis:
    H1: AlgebraElement
    H2: AlgebraElement
    E: tuple[AlgebraElement, ...]
    Ebar: tuple[AlgebraElement, ...]
    roots: tuple[Root, ...]

    def __post_init__(self):
        if len(self.E) != 6 or len(self.Ebar) != 6 or len(self.roots) != 6:
            raise ValueError("G2 has six positive roots")
        for e, eb in zip(self.E, self.Ebar):
            if eb != e.conjugate():
                raise ValueError("Ebar must be the conjugate of E")

    def elements(self) -> tuple[AlgebraElement, ...]:
        return (self.H1, self.H2) + self.E + self.Ebar

    def __getitem__(self, label: str | int) -> AlgebraElement:
        k = label if isinstance(label, int) else label_index(label)
        return self.elements()[k]


@cache
def build_complex_basis() -> ComplexBasis:
    b = _b
    E = (
        b(5) + I * b(6),
        b(14) + I * b(13),
        (2 * b(2) + b(14)) + I * (2 * b(4) + b(13)),
        -(b(5) + 2 * b(11)) + I * (b(6) - 2 * b(10)),
        b(3) + I * b(7),
        (b(7) - 2 * b(8)) + I * (b(3) + 2 * b(9)),
    )
    roots = (
        Root(I, I),
        Root(I, -2 * I),
        Root(I, ZERO),
        Root(I, -I),
        Root(2 * I, -I),
        Root(ZERO, -I),
    )
    inv_s3 = ONE / SQRT3
    H1 = b(1)
    H2 = -inv_s3 * b(1) - 2 * inv_s3 * b(12)
    return ComplexBasis(H1, H2, E, tuple(e.conjugate() for e in E), roots)


def verify_root_vector(E: AlgebraElement, alpha: Root, table: BracketTable | None = None) -> bool:
    """True iff ``[b1, E] = alpha(b1) E`` and ``[b12, E] = alpha(b12) E``."""
    table = table or g2_bracket_table()
    if not E:
        return False
    return (
        table.bracket(_b(1), E) == alpha.value_on_b1 * E
        and table.bracket(_b(12), E) == alpha.value_on_b12 * E
    )


@cache
def change_of_basis() -> tuple[tuple[tuple[FieldElement, ...], ...], tuple[tuple[FieldElement, ...], ...]]:
    """``(to_complex, from_complex)`` as 14x14 matrices.

    ``from_complex`` has the complex basis elements as columns (b-coordinates);
    ``to_complex`` is its inverse, so ``to_complex @ x`` gives the complex
    coordinates of an element with b-coordinates ``x``.
    """
    basis = build_complex_basis().elements()
    from_c = [[basis[col].coeffs[row] for col in range(DIM)] for row in range(DIM)]
    to_c = inverse(from_c)
    return tuple(map(tuple, to_c)), tuple(map(tuple, from_c))


def to_complex_coords(x: AlgebraElement) -> tuple[FieldElement, ...]:
    T, _ = change_of_basis()
    return tuple(sum((T[r][c] * x.coeffs[c] for c in range(DIM) if T[r][c] and x.coeffs[c]), ZERO) for r in range(DIM))


def from_complex_coords(coords) -> AlgebraElement:
    _, F = change_of_basis()
    c = [as_field(v) for v in coords]
    return AlgebraElement(sum((F[r][k] * c[k] for k in range(DIM) if F[r][k] and c[k]), ZERO) for r in range(DIM))


class ComplexBracketTable:
    """Structure constants over the complex basis, keyed by label index pairs ``p < q``."""

    def __init__(self, constants: Mapping[tuple[int, int], Mapping[int, object]]) -> None:
        table = {}
        for (p, q), terms in constants.items():
            if not 0 <= p < q < DIM:
                raise ValueError(f"bad label pair {(p, q)}")
            nz = {k: as_field(v) for k, v in terms.items() if as_field(v)}
            if nz:
                table[(p, q)] = nz
        self.constants = table

    def relation(self, p: int, q: int) -> dict[int, FieldElement]:
        if p == q:
            return {}
        if p < q:
            return dict(self.constants.get((p, q), {}))
        return {k: -v for k, v in self.constants.get((q, p), {}).items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexBracketTable):
            return NotImplemented
        return self.constants == other.constants

    def conjugated(self) -> ComplexBracketTable:
        """Apply complex conjugation to every label and coefficient."""
        out: dict[tuple[int, int], dict[int, FieldElement]] = {}
        for (p, q), terms in self.constants.items():
            cp, cq = conjugate_label(p), conjugate_label(q)
            sign = 1 if cp < cq else -1
            out[(min(cp, cq), max(cp, cq))] = {conjugate_label(k): sign * v.conjugate() for k, v in terms.items()}
        return ComplexBracketTable(out)


def complexified_structure_constants(basis: ComplexBasis, table: BracketTable | None = None) -> ComplexBracketTable:
    table = table or g2_bracket_table()
    els = basis.elements()
    T, _ = change_of_basis() if basis is build_complex_basis() else (None, None)
    if T is None:
        from_c = [[els[col].coeffs[row] for col in range(DIM)] for row in range(DIM)]
        T = inverse(from_c)
    consts = {}
    for p in range(DIM):
        for q in range(p + 1, DIM):
            v = table.bracket(els[p], els[q]).coeffs
            coords = matmul(T, [[x] for x in v])
            consts[(p, q)] = {k: coords[k][0] for k in range(DIM) if coords[k][0]}
    return ComplexBracketTable(consts)


@cache
def complex_bracket_table() -> ComplexBracketTable:
    return complexified_structure_constants(build_complex_basis())


def killing_complex_pairings(table: BracketTable | None = None) -> dict[tuple[int, int], FieldElement]:
    """Nonzero values ``K(e_p, e_q)``, ``p <= q``, over the complex basis."""
    table = table or g2_bracket_table()
    els = build_complex_basis().elements()
    out = {}
    for p in range(DIM):
        for q in range(p, DIM):
            v = table.killing_form(els[p], els[q])
            if v:
                out[(p, q)] = v
    return out
