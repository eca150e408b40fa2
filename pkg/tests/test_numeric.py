from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from g2skt.g2 import elementary, mat_add
from g2skt.hermitian import MetricParams3, hermitian_components, positivity_region, skt_metric
from g2skt.numeric import (
    SampleConfig,
    dc_residual,
    g2_float_basis,
    group_check,
    group_residuals,
    in_region,
    is_positive_definite,
    j_residual,
    metric_from_params,
    sample,
)

box = st.fractions(min_value=0, max_value=10, max_denominator=16)


def test_float_metric_matches_exact():
    assert np.allclose(metric_from_params(3, 1, 1), skt_metric((3, 1, 1)).to_float(), atol=0)


@given(box, box, st.fractions(min_value=0, max_value=40, max_denominator=16))
def test_float_region_matches_exact(a1, a2, a3):
    assert in_region(float(a1), float(a2), float(a3)) == positivity_region(MetricParams3(a1, a2, a3))


def test_dc_residual_detects_non_skt_metric():
    # all lambdas equal is Hermitian but not SKT: the float route must see it
    g = hermitian_components((1,) * 7).to_float()
    assert j_residual(g) < 1e-12
    assert dc_residual(g) > 1e-3
    assert dc_residual(metric_from_params(3, 1, 1)) < 1e-12


def test_j_residual_detects_non_hermitian():
    assert j_residual(np.eye(14) + np.diag(np.arange(14.0))) > 1


def test_positive_definite_float():
    assert is_positive_definite(np.eye(3))
    assert not is_positive_definite(np.diag([1.0, -1.0, 1.0]))


def test_sample_reproducible():
    cfg = SampleConfig(samples=20, seed=7)
    assert sample(cfg).to_json() == sample(cfg).to_json()
    assert sample(cfg).to_json() != sample(SampleConfig(samples=20, seed=8)).to_json()


def test_sample_small_run_passes():
    rep = sample(SampleConfig(samples=50, seed=42))
    assert rep.accepted == 50 and rep.all_pass


def test_forced_biinvariant_point():
    rep = sample(SampleConfig(samples=1, seed=0, point=(Fraction(96), Fraction(32), Fraction(96))))
    assert rep.accepted == 1 and rep.max_dc_residual < 1e-9 and rep.all_pass


def test_empty_region_box():
    rep = sample(SampleConfig(samples=3, seed=1, box=((0, 1), (5, 6), (0, 1))))
    assert rep.accepted == 0 and not rep.all_pass


@pytest.mark.parametrize(
    "kwargs",
    [{"tolerance": 0.0}, {"tolerance": -1.0}, {"samples": 0}, {"seed": -1}, {"seed": 2**64}, {"box": ((1, 0), (0, 1), (0, 1))}],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SampleConfig(**kwargs)


def test_identity_exponential():
    res = group_residuals(g2_float_basis()[0], 0.0, np.ones(7), np.arange(7.0))
    assert all(v == 0 for v in res.values())


def test_group_check_passes():
    rep = group_check(30, 5)
    assert rep.all_pass
    assert rep.to_dict()["schema"] == "g2skt/1"


def test_non_member_exponential_breaks_phi():
    X = np.array([[float(v) for v in r] for r in mat_add(elementary(1, 2), elementary(2, 1), -1)])
    assert group_residuals(X, 0.3)["phi"] > 1e-2


@settings(max_examples=10)
@given(st.lists(st.floats(-1, 1), min_size=14, max_size=14), st.floats(-1, 1))
def test_exponentials_of_g2_preserve_phi(x, t):
    X = np.einsum("k,kij->ij", np.array(x), g2_float_basis())
    assert max(group_residuals(X, t).values()) < 1e-8
