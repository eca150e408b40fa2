"""Left-invariant Hermitian metrics for the Samelson structure and the SKT condition.

The 7-parameter family is diagonal in the complex basis: ``lambda0`` on
``H1, H2`` and ``lambda_j`` on the pair ``E_j, E_j-bar``.  Its fundamental
form is ``omega = lambda0 H1*^H2* + i sum_j lambda_j E_j*^E_j-bar*``; the
torsion 3-form is ``c = J d omega`` and the metric is SKT iff ``dc = 0``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from .algebra import DIM, BracketTable, basis_element
from .forms import NPARAMS, InvariantForm, LambdaLinear, d, dual, j_action, lam, wedge
from .g2 import g2_bracket_table
from .linalg import dedupe_rows, leading_pivots, nullspace, rref, to_fraction_rows
from .roots import change_of_basis
from .samelson import ComplexStructure, build_samelson
from .scalars import I, ZERO, FieldElement, as_field

__all__ = [
    "MetricParams7",
    "MetricParams3",
    "MetricMatrix",
    "SktSolution",
    "RegionError",
    "ELIMINATION_ORDER",
    "hermitian_components",
    "check_j_compatible",
    "fundamental_form",
    "torsion_c",
    "torsion_dc",
    "solve_skt",
    "gamma",
    "region_violations",
    "positivity_region",
    "skt_lambdas",
    "skt_metric",
    "skt_metric_symbolic",
    "torus_invariance",
    "biinvariant_params",
    "killing_metric",
    "converse_space",
    "ConverseResult",
    "satisfies_converse_constraints",
]

# pivot order for the dc = 0 solve; leaves lambda3, lambda5, lambda6 free
ELIMINATION_ORDER = (0, 1, 2, 4, 3, 5, 6)
FREE_PARAMS = (3, 5, 6)


class RegionError(ValueError):
    """Parameters outside the region where the SKT metric is positive definite."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


def _rational(x) -> Fraction:
    if isinstance(x, FieldElement):
        return x.to_fraction()
    return Fraction(x)


@dataclass(frozen=True)
class MetricParams7:
    lambdas: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(_rational(v) for v in self.lambdas)
        if len(vals) != NPARAMS:
            raise ValueError(f"expected {NPARAMS} parameters lambda0..lambda6")
        bad = [k for k, v in enumerate(vals) if v <= 0]
        if bad:
            raise ValueError(f"parameters must be positive: lambda{bad[0]} = {vals[bad[0]]}")
        object.__setattr__(self, "lambdas", vals)


@dataclass(frozen=True)
class MetricParams3:
    a1: Fraction
    a2: Fraction
    a3: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3"):
            object.__setattr__(self, name, _rational(getattr(self, name)))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a1, self.a2, self.a3)


@dataclass(frozen=True)
class MetricMatrix:
    """Symmetric 14x14 bilinear form on the b-basis.

    Entries are exact scalars, or :class:`LambdaLinear` for the symbolic
    family.  :meth:`entry` is 1-based like the basis labels.
    """

    entries: tuple[tuple, ...]

    def __post_init__(self):
        if len(self.entries) != DIM or any(len(r) != DIM for r in self.entries):
            raise ValueError("metric must be 14x14")

    @classmethod
    def from_rows(cls, rows) -> MetricMatrix:
        def norm(v):
            return v if isinstance(v, LambdaLinear) else as_field(v)

        return cls(tuple(tuple(norm(v) for v in r) for r in rows))

    def entry(self, i: int, j: int):
        return self.entries[i - 1][j - 1]

    @property
    def symbolic(self) -> bool:
        return any(isinstance(v, LambdaLinear) for r in self.entries for v in r)

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i] for i in range(DIM) for j in range(i))

    def nonzero_upper(self) -> dict[tuple[int, int], object]:
        return {(i + 1, j + 1): self.entries[i][j] for i in range(DIM) for j in range(i, DIM) if self.entries[i][j]}

    def evaluate(self, values: Sequence) -> MetricMatrix:
        return MetricMatrix.from_rows(
            [[v.evaluate(values) if isinstance(v, LambdaLinear) else v for v in r] for r in self.entries]
        )

    def substitute(self, mapping) -> MetricMatrix:
        return MetricMatrix(
            tuple(tuple(v.substitute(mapping) if isinstance(v, LambdaLinear) else v for v in r) for r in self.entries)
        )

    def is_positive_definite(self) -> bool:
        """Exact test: all leading principal minors positive (via elimination pivots)."""
        if self.symbolic:
            raise TypeError("positive definiteness needs numeric entries")
        pivots = leading_pivots([list(r) for r in self.entries])
        return len(pivots) == DIM and all(p.sign_real() > 0 for p in pivots)

    def to_float(self):
        import numpy as np

        return np.array([[float(v) for v in r] for r in self.entries])

    def to_json(self) -> list[list[str]]:
        return [[str(v) for v in r] for r in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MetricMatrix):
            return NotImplemented
        return all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    __hash__ = None


def _params7(p) -> tuple[Fraction, ...]:
    return p.lambdas if isinstance(p, MetricParams7) else MetricParams7(tuple(p)).lambdas


def _lambda_of_label(p: int) -> int:
    """Parameter index attached to complex-basis label ``p``."""
    if p < 2:
        return 0
    return p - 1 if p < 8 else p - 7


@cache
def _symbolic_components() -> MetricMatrix:
    # g(x, y) = sum_p lambda(p) * conj(T_p x) * T_p y on real x, y, where T
    # maps b-coordinates to complex-basis coordinates
    T, _ = change_of_basis()
    rows = []
    for r in range(DIM):
        row = []
        for c in range(DIM):
            acc = [ZERO] * NPARAMS
            for p in range(DIM):
                if T[p][r] and T[p][c]:
                    k = _lambda_of_label(p)
                    acc[k] = acc[k] + T[p][r].conjugate() * T[p][c]
            row.append(LambdaLinear(acc))
        rows.append(row)
    return MetricMatrix(tuple(tuple(r) for r in rows))


def hermitian_components(p=None) -> MetricMatrix:
    """Real symmetric matrix of the Hermitian metric on b1..b14.

    With ``p`` omitted the entries are :class:`LambdaLinear`; otherwise ``p``
    is a :class:`MetricParams7` or a sequence of seven positive rationals.
    """
    m = _symbolic_components()
    if p is None:
        return m
    return m.evaluate(_params7(p))


def _mat_entries(m):
    return m.entries if isinstance(m, MetricMatrix) else m


def check_j_compatible(m, J: ComplexStructure | None = None) -> bool:
    """``J^T m J == m`` exactly."""
    J = J or build_samelson()
    G = _mat_entries(m)
    Jm = J.matrix
    for a in range(DIM):
        for b in range(DIM):
            s = 0
            for r in range(DIM):
                if not Jm[r][a]:
                    continue
                for c in range(DIM):
                    if Jm[c][b] and G[r][c]:
                        s = s + G[r][c] * (Jm[r][a] * Jm[c][b])
            if s != G[a][b]:
                return False
    return True


def fundamental_form(p=None) -> InvariantForm:
    """``lambda0 H1*^H2* + i sum_j lambda_j E_j*^E_j-bar*``, symbolic unless ``p`` is given."""
    if p is None:
        coeffs = [lam(k) for k in range(NPARAMS)]
    else:
        coeffs = [as_field(v) for v in _params7(p)]
    omega = wedge(dual("H1", coeffs[0]), dual("H2"))
    for j in range(1, 7):
        omega = omega + wedge(dual(f"E{j}", I * coeffs[j]), dual(f"E{j}bar"))
    return omega


def torsion_c(omega: InvariantForm | None = None) -> InvariantForm:
    """``c = J d omega`` (default: the symbolic fundamental form)."""
    if omega is None:
        return _symbolic_c()
    return j_action(d(omega))


def torsion_dc(omega: InvariantForm | None = None) -> InvariantForm:
    if omega is None:
        return _symbolic_dc()
    return d(torsion_c(omega))


@cache
def _symbolic_c() -> InvariantForm:
    return j_action(d(fundamental_form()))


@cache
def _symbolic_dc() -> InvariantForm:
    return d(_symbolic_c())


@dataclass(frozen=True)
class SktSolution:
    """General solution of ``dc = 0``: pinned parameters as linear forms in the free ones."""

    pinned: dict[int, LambdaLinear]
    free: tuple[int, ...]
    rank: int = field(default=0)

    @property
    def dimension(self) -> int:
        return NPARAMS - self.rank

    def substitution(self) -> dict[int, LambdaLinear]:
        return dict(self.pinned)

    def lambdas(self, free_values: Sequence) -> tuple[Fraction, ...]:
        """All seven parameters given values for the free ones (in ``free`` order)."""
        if len(free_values) != len(self.free):
            raise ValueError(f"expected {len(self.free)} free values")
        vals = [Fraction(0)] * NPARAMS
        for k, v in zip(self.free, free_values):
            vals[k] = _rational(v)
        for k, expr in self.pinned.items():
            vals[k] = expr.evaluate(vals).to_fraction()
        return tuple(vals)

    def to_json(self) -> dict[str, str]:
        return {f"lambda{k}": str(self.pinned[k]) for k in sorted(self.pinned)}


def _dc_rows(dc: InvariantForm) -> list[dict[int, Fraction]]:
    rows = [c.terms() for c in dc.terms.values()]
    return dedupe_rows(to_fraction_rows(rows))


def solve_skt(dc: InvariantForm | None = None) -> SktSolution:
    """Exact elimination of ``dc = 0`` with pivot order lambda0, lambda1, lambda2, lambda4, lambda3, lambda5, lambda6."""
    if dc is None:
        return _default_solution()
    red = rref(_dc_rows(dc), ELIMINATION_ORDER)
    pivots = {c for c, _ in red}
    free = tuple(k for k in ELIMINATION_ORDER if k not in pivots)
    pinned = {}
    for col, row in red:
        pinned[col] = LambdaLinear.from_terms({k: -v for k, v in row.items() if k != col})
    return SktSolution(dict(sorted(pinned.items())), tuple(sorted(free)), rank=len(red))


@cache
def _default_solution() -> SktSolution:
    return solve_skt(torsion_dc())


def gamma(a: MetricParams3) -> Fraction:
    return max(3 * a.a2 - 2 * a.a1, a.a1 - 3 * a.a2, Fraction(0))


def region_violations(a: MetricParams3) -> list[str]:
    """Human-readable list of failed inequalities (empty inside the region)."""
    out = []
    if not a.a2 > 0:
        out.append("0 < a2 violated")
    if not a.a2 < a.a1:
        out.append("a2 < a1 violated")
    g = gamma(a)
    if not g < a.a3:
        out.append(f"gamma < a3 violated (gamma = {g})")
    if not a.a3 < 4 * a.a1 - 3 * a.a2:
        out.append("a3 < 4*a1 - 3*a2 violated")
    return out


def positivity_region(a: MetricParams3) -> bool:
    return not region_violations(a)


def _as_params3(a) -> MetricParams3:
    return a if isinstance(a, MetricParams3) else MetricParams3(*a)


def skt_lambdas(a) -> tuple[Fraction, ...]:
    """lambda0..lambda6 for ``lambda3 = a1, lambda5 = a2, lambda6 = a3``."""
    return solve_skt().lambdas(_as_params3(a).as_tuple())


def skt_metric(a) -> MetricMatrix:
    a = _as_params3(a)
    bad = region_violations(a)
    if bad:
        raise RegionError(bad)
    return hermitian_components(skt_lambdas(a))


def skt_metric_symbolic() -> MetricMatrix:
    """SKT metric with entries linear in (lambda3, lambda5, lambda6) = (a1, a2, a3)."""
    return hermitian_components().substitute(solve_skt().substitution())


def torus_invariance(m, table: BracketTable | None = None) -> bool:
    """``g([b, b_j], b_k) + g(b_j, [b, b_k]) = 0`` for b in {b1, b12} and all j, k."""
    table = table or g2_bracket_table()
    G = _mat_entries(m)
    for h in (1, 12):
        ad = table.ad_matrix(basis_element(h))
        for j in range(DIM):
            for k in range(DIM):
                s = 0
                for r in range(DIM):
                    if ad[r][j] and G[r][k]:
                        s = s + G[r][k] * ad[r][j]
                    if ad[r][k] and G[j][r]:
                        s = s + G[j][r] * ad[r][k]
                if s:
                    return False
    return True


def biinvariant_params(lam_: object) -> MetricParams3:
    s = _rational(lam_)
    if s <= 0:
        raise ValueError("scale must be positive")
    return MetricParams3(96 * s, 32 * s, 96 * s)


def killing_metric(scale=1, table: BracketTable | None = None) -> MetricMatrix:
    """``-scale * K`` on the b-basis."""
    table = table or g2_bracket_table()
    s = _rational(scale)
    return MetricMatrix.from_rows([[-s * v for v in r] for r in table.killing_matrix])


# -- converse: all J-invariant, t-invariant symmetric forms --------------------

_SYM = [(i, j) for i in range(DIM) for j in range(i, DIM)]
_SYM_INDEX = {p: n for n, p in enumerate(_SYM)}


def _sym_var(i: int, j: int) -> int:
    return _SYM_INDEX[(i, j) if i <= j else (j, i)]


def _constraint_rows(J: ComplexStructure, table: BracketTable) -> list[dict[int, FieldElement]]:
    Jm = J.matrix
    rows = []
    # J^T H J - H = 0
    for a in range(DIM):
        for b in range(a, DIM):
            row: dict[int, FieldElement] = {}
            for r in range(DIM):
                if not Jm[r][a]:
                    continue
                for c in range(DIM):
                    if Jm[c][b]:
                        v = _sym_var(r, c)
                        row[v] = row.get(v, ZERO) + Jm[r][a] * Jm[c][b]
            v = _sym_var(a, b)
            row[v] = row.get(v, ZERO) - 1
            rows.append(row)
    # ad_h^T H + H ad_h = 0
    for h in (1, 12):
        ad = table.ad_matrix(basis_element(h))
        for j in range(DIM):
            for k in range(j, DIM):
                row = {}
                for r in range(DIM):
                    if ad[r][j]:
                        v = _sym_var(r, k)
                        row[v] = row.get(v, ZERO) + ad[r][j]
                    if ad[r][k]:
                        v = _sym_var(j, r)
                        row[v] = row.get(v, ZERO) + ad[r][k]
                rows.append(row)
    return [{k: v for k, v in r.items() if v} for r in rows]


def _sym_vector(m) -> list:
    G = _mat_entries(m)
    return [G[i][j] for i, j in _SYM]


def satisfies_converse_constraints(m, J: ComplexStructure | None = None, table: BracketTable | None = None) -> bool:
    """J-invariance plus ad-invariance under b1 and b12, as a linear test."""
    vec = _sym_vector(m)
    for row in _constraint_rows(J or build_samelson(), table or g2_bracket_table()):
        if sum((c * vec[k] for k, c in row.items()), ZERO):
            return False
    return True


@dataclass(frozen=True)
class ConverseResult:
    dimension: int
    basis: tuple[MetricMatrix, ...]
    lambda_coordinates: tuple[tuple[Fraction, ...], ...]
    spans_family: bool
    skt_dimension: int


def _sym_to_matrix(vec) -> MetricMatrix:
    rows = [[Fraction(0)] * DIM for _ in range(DIM)]
    for (i, j), v in zip(_SYM, vec):
        rows[i][j] = rows[j][i] = v
    return MetricMatrix.from_rows(rows)


@cache
def converse_space() -> ConverseResult:
    """Enumerate symmetric forms invariant under J and ad(b1), ad(b12).

    The solution space is matched against the seven unit-lambda members of
    the Hermitian family, then intersected with ``dc = 0``.
    """
    J, table = build_samelson(), g2_bracket_table()
    nsym = len(_SYM)
    rows = dedupe_rows(to_fraction_rows(_constraint_rows(J, table)))
    null = nullspace(rows, nsym)
    basis = tuple(_sym_to_matrix(v) for v in null)

    # coordinates of each solution in terms of the unit-lambda family members
    family = []
    for k in range(NPARAMS):
        unit = [Fraction(int(m == k)) for m in range(NPARAMS)]
        family.append([_rational(x) for x in _sym_vector(hermitian_components().evaluate(unit))])
    spans = True
    coords = []
    for v in null:
        # solve sum_k x_k family[k] = v
        eqs = []
        for n in range(nsym):
            row = {k: family[k][n] for k in range(NPARAMS) if family[k][n]}
            if v[n]:
                row[NPARAMS] = -Fraction(v[n])
            if row:
                eqs.append(row)
        red = rref(eqs, list(range(NPARAMS + 1)))
        if any(c == NPARAMS for c, _ in red):
            spans = False
            coords.append(())
            continue
        x = [Fraction(0)] * NPARAMS
        for c, r in red:
            x[c] = -Fraction(r.get(NPARAMS, 0))
        coords.append(tuple(x))
    if len(null) != NPARAMS or not spans:
        skt_dim = -1
    else:
        # dc is linear in lambda; pull its equations back to the solution coordinates
        dc_rows = _dc_rows(torsion_dc())
        pulled = []
        for row in dc_rows:
            new = {}
            for s, x in enumerate(coords):
                val = sum((row.get(k, 0) * x[k] for k in range(NPARAMS)), Fraction(0))
                if val:
                    new[s] = val
            if new:
                pulled.append(new)
        skt_dim = len(null) - len(rref(pulled, list(range(len(null)))))
    return ConverseResult(len(null), basis, tuple(coords), spans, skt_dim)
