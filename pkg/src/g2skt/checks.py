"""Exact certificate checks comparing computed objects with the reference fixtures.

Every check returns a :class:`Certificate`; :func:`run_checks` wraps them in
:class:`CheckReport` records in registry order.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import tables
from .algebra import DIM, BracketTable, basis_element
from .forms import InvariantForm, LambdaLinear, d, d_one_form
from .g2 import (
    build_g2_basis,
    cross,
    g2_bracket_table,
    g2_membership,
    inner,
    linearized_invariance_rows,
    membership_constraint_rows,
    phi_contraction_scalar,
    skew_constraint_rows,
    structure_constants,
    unit_vector,
    vector,
)
from .hermitian import (
    biinvariant_params,
    check_j_compatible,
    converse_space,
    hermitian_components,
    killing_metric,
    positivity_region,
    MetricParams3,
    skt_lambdas,
    skt_metric,
    skt_metric_symbolic,
    solve_skt,
    torsion_c,
    torsion_dc,
    torus_invariance,
)
from .linalg import rank, rref
from .roots import (
    LABELS,
    ComplexBracketTable,
    Root,
    build_complex_basis,
    change_of_basis,
    complex_bracket_table,
    killing_complex_pairings,
    label_index,
    verify_root_vector,
)
from .samelson import build_samelson, check_killing_compatible, nijenhuis
from .scalars import ZERO, as_field

__all__ = ["Certificate", "CheckReport", "CHECKS", "check_ids", "run_check", "run_checks", "SCHEMA"]

SCHEMA = "g2skt/1"
RANDOM_SEED = 20240607


@dataclass
class Certificate:
    check: str
    inputs: object
    expected_ref: str
    computed: object
    equal: bool

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "inputs": self.inputs,
            "expected_ref": self.expected_ref,
            "computed": self.computed,
            "equal": self.equal,
        }


@dataclass
class CheckReport:
    check_id: str
    paper_anchor: str
    status: str
    detail: str
    elapsed_ms: int
    certificate: Certificate

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "paper_anchor": self.paper_anchor,
            "status": self.status,
            "detail": self.detail,
            "elapsed_ms": self.elapsed_ms,
            "certificate": self.certificate.to_dict(),
        }


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 9))


def _random_vector(rng: random.Random):
    return vector(_random_rational(rng) for _ in range(7))


def _mismatches(computed: dict, expected: dict, limit: int = 10) -> list[str]:
    keys = sorted(set(computed) | set(expected), key=str)
    out = []
    for k in keys:
        if computed.get(k) != expected.get(k):
            out.append(f"{k}: computed {computed.get(k)} expected {expected.get(k)}")
            if len(out) >= limit:
                break
    return out


# -- R^7 and g2 --------------------------------------------------------------------


def check_phi_contraction() -> Certificate:
    rng = random.Random(RANDOM_SEED)
    bad = []
    pairs = [(unit_vector(i), unit_vector(j)) for i in range(1, 8) for j in range(1, 8)]
    pairs += [(_random_vector(rng), _random_vector(rng)) for _ in range(100)]
    for u, v in pairs:
        if phi_contraction_scalar(u, v) != -6 * inner(u, v):
            bad.append([str(x) for x in u] + ["|"] + [str(x) for x in v])
    return Certificate(
        "phi-contraction",
        {"basis_pairs": 49, "random_pairs": 100, "seed": RANDOM_SEED},
        "contraction of phi with itself equals -6<u,v> mu0",
        {"failures": bad[:5]},
        not bad,
    )


def check_cross_product() -> Certificate:
    rng = random.Random(RANDOM_SEED + 1)
    bad = 0
    for _ in range(100):
        u, v = _random_vector(rng), _random_vector(rng)
        uv = cross(u, v)
        norm_ok = inner(uv, uv) == inner(u, u) * inner(v, v) - inner(u, v) ** 2
        lhs = cross(u, uv)
        rhs = tuple(-inner(u, u) * b + inner(u, v) * a for a, b in zip(u, v))
        if not (norm_ok and lhs == rhs):
            bad += 1
    return Certificate(
        "cross-product",
        {"random_pairs": 100, "seed": RANDOM_SEED + 1},
        "|u x v|^2 = |u|^2|v|^2 - <u,v>^2 and u x (u x v) = -|u|^2 v + <u,v> u",
        {"failures": bad},
        bad == 0,
    )


def check_dimension() -> Certificate:
    r = rank(membership_constraint_rows())
    dim = 21 - r
    hard = rref(skew_constraint_rows(), list(range(49)))
    lin = rref(linearized_invariance_rows(), list(range(49)))
    basis = build_g2_basis()
    members = all(g2_membership(b) for b in basis.elements)
    ok = r == 7 and dim == 14 and hard == lin and members and basis.is_independent()
    return Certificate(
        "dimension",
        {"skew_parameters": 21},
        "seven independent constraints, dimension 21 - 7 = 14",
        {
            "constraint_rank": r,
            "dimension": dim,
            "rederived_system_agrees": hard == lin,
            "basis_members": members,
            "basis_independent": basis.is_independent(),
        },
        ok,
    )


def _bracket_text(table: BracketTable) -> dict[tuple[int, int], dict[int, Fraction]]:
    return {k: dict(v) for k, v in table.constants.items()}


def check_brackets() -> Certificate:
    computed = _bracket_text(structure_constants(build_g2_basis()))
    expected = tables.parse_real_brackets(tables.BRACKETS_REAL_TEXT)
    bad = _mismatches(computed, expected)
    return Certificate(
        "brackets",
        {"pairs": 91},
        "nonzero bracket relations of the real basis",
        {"nonzero_relations": len(computed), "mismatches": bad},
        not bad and len(expected) == len(computed),
    )


def check_jacobi() -> Certificate:
    t = g2_bracket_table()
    b = basis_element
    bad = []
    for i, j, k in combinations(range(1, DIM + 1), 3):
        s = t.bracket(t.bracket(b(i), b(j)), b(k)) + t.bracket(t.bracket(b(j), b(k)), b(i)) + t.bracket(
            t.bracket(b(k), b(i)), b(j)
        )
        if s:
            bad.append([i, j, k])
    return Certificate("jacobi", {"triples": 364}, "Jacobi identity", {"failures": bad[:5]}, not bad)


def check_killing() -> Certificate:
    t = g2_bracket_table()
    k11 = t.killing_form(basis_element(1), basis_element(1))
    computed = {(LABELS[p], LABELS[q]): v for (p, q), v in killing_complex_pairings().items()}
    expected = {k: as_field(v) for k, v in tables.KILLING_COMPLEX.items()}
    bad = _mismatches(computed, expected)
    ok = k11 == tables.KILLING_B1_B1 and not bad
    return Certificate(
        "killing",
        {},
        "Killing form values on b1 and on the complex basis",
        {"K(b1,b1)": str(k11), "pairings": {f"{p},{q}": str(v) for (p, q), v in computed.items()}, "mismatches": bad},
        ok,
    )


# -- roots and complex structure ---------------------------------------------------


def check_roots() -> Certificate:
    B = build_complex_basis()
    bad = []
    for j in range(6):
        root = Root(*(as_field(x) for x in tables.ROOTS[j]))
        vec = basis_element(1) * 0
        for k, c in tables.ROOT_VECTORS[j].items():
            vec = vec + as_field(c) * basis_element(k)
        if vec != B.E[j]:
            bad.append(f"E{j + 1} differs from reference")
        if not verify_root_vector(B.E[j], root):
            bad.append(f"E{j + 1} eigen-relation")
        if not verify_root_vector(B.Ebar[j], -root):
            bad.append(f"E{j + 1}bar eigen-relation")
    for j, (v1, v2) in tables.ROOT_VALUES_ON_H.items():
        root = B.roots[j - 1]
        if root(B.H1) != as_field(v1) or root(B.H2) != as_field(v2):
            bad.append(f"alpha{j} on H1, H2")
    return Certificate(
        "roots",
        {"root_vectors": 6, "cartan": ["b1", "b12"]},
        "root values on b1, b12 and the eigen-relations of the root vectors",
        {"failures": bad},
        not bad,
    )


def _fixture_complex_table() -> ComplexBracketTable:
    out = {}
    for (p, q), terms in tables.BRACKETS_COMPLEX.items():
        ip, iq = label_index(p), label_index(q)
        sign = 1 if ip < iq else -1
        out[(min(ip, iq), max(ip, iq))] = {label_index(k): sign * as_field(v) for k, v in terms.items()}
    return ComplexBracketTable(out)


def _complex_table_dict(t: ComplexBracketTable) -> dict:
    return {(LABELS[p], LABELS[q]): {LABELS[k]: str(v) for k, v in terms.items()} for (p, q), terms in t.constants.items()}


def check_brackets_complex() -> Certificate:
    computed = complex_bracket_table()
    expected = _fixture_complex_table()
    bad = _mismatches(_complex_table_dict(computed), _complex_table_dict(expected))
    symmetric = computed.conjugated() == computed
    return Certificate(
        "brackets-complex",
        {"labels": list(LABELS)},
        "nonzero bracket relations of the complexified basis",
        {"nonzero_relations": len(computed.constants), "conjugation_symmetric": symmetric, "mismatches": bad},
        not bad and symmetric,
    )


def check_change_of_basis() -> Certificate:
    to_c, from_c = change_of_basis()
    bad = []
    for k, terms in tables.REAL_IN_COMPLEX.items():
        col = {LABELS[p]: to_c[p][k - 1] for p in range(DIM) if to_c[p][k - 1]}
        exp = {name: as_field(v) for name, v in terms.items()}
        if col != exp:
            bad.append(f"b{k}")
    prod_ok = all(
        sum((to_c[r][m] * from_c[m][c] for m in range(DIM)), ZERO) == (1 if r == c else 0)
        for r in range(DIM)
        for c in range(DIM)
    )
    return Certificate(
        "change-of-basis",
        {},
        "real basis expressed through H1, H2, E_j, E_j-bar",
        {"mismatches": bad, "inverse_exact": prod_ok},
        not bad and prod_ok,
    )


def check_samelson() -> Certificate:
    J = build_samelson()
    t = g2_bracket_table()
    display_ok = all(J.image(k) == {i: as_field(v) for i, v in img.items()} for k, img in tables.SAMELSON_REAL.items())
    square = J.squares_to_minus_identity()
    nij_bad = [
        [i, j] for i, j in combinations(range(1, DIM + 1), 2) if nijenhuis(J, basis_element(i), basis_element(j), t)
    ]
    killing = check_killing_compatible(J, t)
    ok = display_ok and square and not nij_bad and killing
    return Certificate(
        "samelson",
        {"pairs": 91},
        "J on the real basis, J^2 = -1, vanishing Nijenhuis tensor, Killing compatibility",
        {"display_matches": display_ok, "squares_to_minus_one": square, "nijenhuis_nonzero": nij_bad, "killing_compatible": killing},
        ok,
    )


# -- Hermitian family, forms, SKT ----------------------------------------------------


def _lin(terms: dict[int, str]) -> LambdaLinear:
    return LambdaLinear.from_terms({k: as_field(v) for k, v in terms.items()})


def check_hermitian_components() -> Certificate:
    m = hermitian_components()
    computed = {k: str(v) for k, v in m.nonzero_upper().items()}
    expected = {k: str(_lin(v)) for k, v in tables.HERMITIAN_COMPONENTS.items()}
    bad = _mismatches(computed, expected)
    compat = check_j_compatible(m)
    return Certificate(
        "hermitian-components",
        {"parameters": "lambda0..lambda6"},
        "nonzero components of the Hermitian family on the real basis",
        {"components": {f"{i},{j}": v for (i, j), v in computed.items()}, "mismatches": bad, "j_compatible": compat},
        not bad and compat and m.is_symmetric(),
    )


def _fixture_form(degree: int, items) -> InvariantForm:
    return InvariantForm.from_unsorted(degree, items)


def check_d_table() -> Certificate:
    bad = []
    for name, terms in tables.D_TABLE.items():
        exp = _fixture_form(2, [(labels, as_field(c)) for c, labels in terms])
        if d_one_form(name) != exp:
            bad.append(name)
    nonclosed = [LABELS[k] for k in range(DIM) if d(d_one_form(k))]
    return Certificate(
        "d-table",
        {"labels": list(LABELS)},
        "exterior derivative of the complex dual basis",
        {"mismatches": bad, "d_squared_nonzero": nonclosed},
        not bad and not nonclosed,
    )


def check_c70() -> Certificate:
    c = torsion_c()
    exp = _fixture_form(3, [(labels, _lin(t)) for t, labels in tables.TORSION_C])
    return Certificate(
        "c70",
        {"omega": "symbolic"},
        "torsion 3-form c = J d omega",
        {"terms": len(c), "expected_terms": len(exp), "form": c.to_json()},
        c == exp,
    )


def check_dc71() -> Certificate:
    dc = torsion_dc()
    exp = _fixture_form(4, [(labels, _lin(t)) for t, labels in tables.TORSION_DC])
    return Certificate(
        "dc71",
        {"omega": "symbolic"},
        "exterior derivative of the torsion 3-form",
        {"terms": len(dc), "expected_terms": len(exp), "form": dc.to_json()},
        dc == exp,
    )


def check_skt_solve() -> Certificate:
    sol = solve_skt()
    expected = {k: _lin(v) for k, v in tables.SKT_SOLUTION.items()}
    back = torsion_dc().substitute(sol.substitution())
    ok = sol.dimension == 3 and sol.free == (3, 5, 6) and sol.pinned == expected and not back
    return Certificate(
        "skt-solve",
        {"elimination_order": ["lambda0", "lambda1", "lambda2", "lambda4", "lambda3", "lambda5", "lambda6"]},
        "general solution of dc = 0",
        {"solution": sol.to_json(), "dimension": sol.dimension, "substituted_dc_zero": not back},
        ok,
    )


def _grid():
    for i in range(1, 11):
        for j in range(1, 11):
            for k in range(1, 11):
                yield Fraction(10 * i, 11), Fraction(10 * j, 11), Fraction(40 * k, 11)


def check_skt_metric() -> Certificate:
    sym = skt_metric_symbolic()
    slots = (3, 5, 6)
    computed = {}
    for (i, j), v in sym.nonzero_upper().items():
        computed[(i, j)] = tuple(v.coeffs[s].to_fraction() for s in slots)
    expected = {k: tuple(Fraction(c, den) for c in cs) for k, (cs, den) in tables.SKT_METRIC.items()}
    bad = _mismatches(computed, expected)
    disagreements = []
    inside = 0
    for a in _grid():
        lam = skt_lambdas(a)
        direct = all(x > 0 for x in lam)
        region = positivity_region(MetricParams3(*a))
        inside += region
        if direct != region:
            disagreements.append([str(x) for x in a])
    torus = torus_invariance(sym)
    ok = not bad and not disagreements and torus
    return Certificate(
        "skt-metric",
        {"grid": "a1, a2 in 10k/11, a3 in 40k/11, k = 1..10"},
        "SKT metric components, parameter region, torus invariance",
        {
            "component_mismatches": bad,
            "grid_points": 1000,
            "grid_points_in_region": inside,
            "region_disagreements": disagreements[:5],
            "torus_invariant": torus,
        },
        ok,
    )


def check_biinvariant() -> Certificate:
    results = {}
    ok = True
    for s in (Fraction(1), Fraction(1, 32), Fraction(7, 3)):
        a = biinvariant_params(s)
        lam = skt_lambdas(a)
        lam_ok = lam == tuple(s * x for x in tables.BIINVARIANT_LAMBDAS)
        g_ok = skt_metric(a) == killing_metric(s)
        results[str(s)] = {"a": [str(x) for x in a.as_tuple()], "lambda_matches": lam_ok, "metric_is_minus_scaled_killing": g_ok}
        ok = ok and lam_ok and g_ok and a.as_tuple() == tuple(s * x for x in tables.BIINVARIANT_A)
    return Certificate("biinvariant", {"scales": ["1", "1/32", "7/3"]}, "bi-invariant member equals -scale * K", results, ok)


def check_torus() -> Certificate:
    herm = torus_invariance(hermitian_components())
    skt = torus_invariance(skt_metric((3, 1, 1)))
    ident = [[1 if i == j else 0 for j in range(DIM)] for i in range(DIM)]
    control = torus_invariance(ident)
    return Certificate(
        "torus",
        {"generators": ["b1", "b12"]},
        "ad-invariance under the maximal torus",
        {"hermitian_family": herm, "skt_metric_3_1_1": skt, "identity_control": control},
        herm and skt and not control,
    )


def check_converse() -> Certificate:
    res = converse_space()
    ok = res.dimension == 7 and res.spans_family and res.skt_dimension == 3
    return Certificate(
        "converse",
        {"symmetric_forms": 105, "constraints": ["J-invariance", "ad(b1)", "ad(b12)"]},
        "J-invariant torus-invariant symmetric forms and their SKT members",
        {"dimension": res.dimension, "spans_hermitian_family": res.spans_family, "skt_dimension": res.skt_dimension},
        ok,
    )


CHECKS: dict[str, tuple[str, Callable[[], Certificate]]] = {
    "phi-contraction": ("phi contraction identity", check_phi_contraction),
    "cross-product": ("cross product identities", check_cross_product),
    "dimension": ("g2 membership constraints", check_dimension),
    "brackets": ("real bracket table", check_brackets),
    "jacobi": ("Jacobi identity", check_jacobi),
    "killing": ("Killing form values", check_killing),
    "roots": ("root decomposition", check_roots),
    "brackets-complex": ("complexified bracket table", check_brackets_complex),
    "change-of-basis": ("real basis in complex coordinates", check_change_of_basis),
    "samelson": ("Samelson complex structure", check_samelson),
    "hermitian-components": ("Hermitian family components", check_hermitian_components),
    "d-table": ("exterior derivative table", check_d_table),
    "c70": ("torsion 3-form", check_c70),
    "dc71": ("derivative of the torsion", check_dc71),
    "skt-solve": ("SKT linear system", check_skt_solve),
    "skt-metric": ("SKT metric family", check_skt_metric),
    "torus": ("torus invariance", check_torus),
    "biinvariant": ("bi-invariant member", check_biinvariant),
    "converse": ("converse enumeration", check_converse),
}


def check_ids() -> list[str]:
    return list(CHECKS)


def run_check(check_id: str) -> CheckReport:
    anchor, fn = CHECKS[check_id]
    start = time.perf_counter()
    try:
        cert = fn()
        detail = "ok" if cert.equal else "computed value differs from reference"
    except Exception as exc:  # a crashing check is a failing check
        cert = Certificate(check_id, {}, anchor, {"error": repr(exc)}, False)
        detail = f"error: {exc!r}"
    elapsed = int((time.perf_counter() - start) * 1000)
    return CheckReport(check_id, anchor, "pass" if cert.equal else "fail", detail, elapsed, cert)


def run_checks(only: list[str] | None = None) -> list[CheckReport]:
    ids = check_ids() if not only else [c for c in check_ids() if c in set(only)]
    return [run_check(c) for c in ids]
