from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from g2skt import tables
from g2skt.forms import LambdaLinear
from g2skt.hermitian import (
    FREE_PARAMS,
    MetricMatrix,
    MetricParams3,
    MetricParams7,
    RegionError,
    biinvariant_params,
    check_j_compatible,
    converse_space,
    fundamental_form,
    hermitian_components,
    killing_metric,
    positivity_region,
    region_violations,
    satisfies_converse_constraints,
    skt_lambdas,
    skt_metric,
    skt_metric_symbolic,
    solve_skt,
    torsion_c,
    torsion_dc,
    torus_invariance,
)
from g2skt.scalars import parse_scalar

positive = st.fractions(min_value=Fraction(1, 20), max_value=50, max_denominator=20)
box_a1a2 = st.fractions(min_value=Fraction(1, 20), max_value=10, max_denominator=20)
box_a3 = st.fractions(min_value=Fraction(1, 20), max_value=40, max_denominator=20)


def _identity():
    return MetricMatrix.from_rows([[int(i == j) for j in range(14)] for i in range(14)])


def test_components_match_reference():
    m = hermitian_components()
    expected = {k: LambdaLinear.from_terms({p: parse_scalar(c) for p, c in t.items()}) for k, t in tables.HERMITIAN_COMPONENTS.items()}
    assert m.nonzero_upper() == expected
    assert m.is_symmetric()


@settings(max_examples=10)
@given(st.lists(positive, min_size=7, max_size=7))
def test_family_members_are_hermitian_and_positive(lams):
    m = hermitian_components(lams)
    assert m.is_positive_definite()
    assert check_j_compatible(m)
    assert torus_invariance(m)


def test_identity_is_not_hermitian_or_torus_invariant():
    assert not check_j_compatible(_identity())
    assert not torus_invariance(_identity())


def test_params7_positive():
    with pytest.raises(ValueError):
        MetricParams7((1, 1, 1, 0, 1, 1, 1))


def test_torsion_term_counts():
    assert len(torsion_c()) == 20
    assert len(torsion_dc()) == 16


def test_solution_matches_reference():
    sol = solve_skt()
    assert sol.dimension == 3
    assert sol.free == FREE_PARAMS
    expected = {k: LambdaLinear.from_terms({p: parse_scalar(c) for p, c in t.items()}) for k, t in tables.SKT_SOLUTION.items()}
    assert sol.pinned == expected
    assert sol.to_json()["lambda0"] == "1/6 λ3 - 1/4 λ5 + 1/12 λ6"


def test_known_point():
    assert skt_lambdas((3, 1, 1)) == tuple(map(Fraction, ("1/3", "4/3", "1/3", "3", "2", "1", "1")))


@settings(max_examples=15)
@given(box_a1a2, box_a1a2, box_a3)
def test_solution_kills_dc(a1, a2, a3):
    lams = skt_lambdas((a1, a2, a3))
    # the fundamental form only needs nonzero values for d, so check dc through evaluation
    assert not torsion_dc().evaluate(lams)


@given(box_a1a2, box_a1a2, box_a3)
def test_region_equals_lambda_positivity(a1, a2, a3):
    lams = skt_lambdas((a1, a2, a3))
    assert positivity_region(MetricParams3(a1, a2, a3)) == all(x > 0 for x in lams)


unit = st.fractions(min_value=Fraction(1, 20), max_value=Fraction(19, 20), max_denominator=20)


@st.composite
def region_points(draw):
    a2 = draw(box_a1a2)
    a1 = a2 + draw(box_a1a2)
    low = max(3 * a2 - 2 * a1, a1 - 3 * a2, Fraction(0))
    a3 = low + draw(unit) * (4 * a1 - 3 * a2 - low)
    return MetricParams3(a1, a2, a3)


@settings(max_examples=10)
@given(region_points())
def test_region_points_give_skt_metrics(a):
    assert positivity_region(a)
    g = skt_metric(a)
    assert g.is_positive_definite()
    assert check_j_compatible(g)
    assert not torsion_dc(fundamental_form(skt_lambdas(a)))


@settings(max_examples=10)
@given(box_a1a2, box_a1a2, st.sampled_from(["lambda0", "lambda1", "lambda2"]))
def test_facets_degenerate(a1, a2, facet):
    # on each bounding hyperplane exactly one lambda vanishes and the metric stops being definite
    a3 = {"lambda0": 3 * a2 - 2 * a1, "lambda1": 4 * a1 - 3 * a2, "lambda2": a1 - 3 * a2}[facet]
    assume(a3 > 0)
    a = MetricParams3(a1, a2, a3)
    lams = skt_lambdas(a)
    assert lams[int(facet[-1])] == 0
    assert region_violations(a)
    assert not hermitian_components_or_none(lams)


def hermitian_components_or_none(lams):
    try:
        MetricParams7(lams)
    except ValueError:
        return None
    return hermitian_components(lams).is_positive_definite()


def test_region_messages():
    assert region_violations(MetricParams3(1, 2, 1))[0] == "a2 < a1 violated"
    with pytest.raises(RegionError) as err:
        skt_metric((1, 2, 1))
    assert "a2 < a1 violated" in err.value.violations


def test_symbolic_metric_matches_displays():
    sym = skt_metric_symbolic()
    for (i, j), (cs, den) in tables.SKT_METRIC.items():
        v = sym.entry(i, j)
        assert tuple(v.coeffs[s].to_fraction() for s in FREE_PARAMS) == tuple(Fraction(c, den) for c in cs)


@settings(max_examples=10)
@given(positive)
def test_biinvariant_members(s):
    a = biinvariant_params(s)
    assert skt_lambdas(a) == tuple(s * x for x in tables.BIINVARIANT_LAMBDAS)
    assert skt_metric(a) == killing_metric(s)


def test_converse_dimensions():
    res = converse_space()
    assert res.dimension == 7
    assert res.spans_family
    assert res.skt_dimension == 3
    assert all(satisfies_converse_constraints(m) for m in res.basis)
    assert not satisfies_converse_constraints(_identity())


def test_positive_definite_agrees_with_float():
    g = skt_metric((3, 1, 1))
    assert g.is_positive_definite() == bool(np.all(np.linalg.eigvalsh(g.to_float()) > 0))
