from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from g2skt import tables
from g2skt.forms import (
    InvariantForm,
    LambdaLinear,
    QuadraticLambdaError,
    d,
    d_one_form,
    dual,
    j_action,
    lam,
    parse_labels,
    wedge,
)
from g2skt.roots import LABELS, complex_bracket_table
from g2skt.scalars import I, ONE, ZERO, FieldElement, parse_scalar

from conftest import field_elements, small_fractions


def forms(degree):
    term = st.tuples(st.lists(st.integers(0, 13), min_size=degree, max_size=degree, unique=True), field_elements)
    return st.lists(term, max_size=4).map(lambda items: InvariantForm.from_unsorted(degree, [(tuple(i), c) for i, c in items]))


lambda_linears = st.lists(small_fractions, min_size=7, max_size=7).map(LambdaLinear)


# -- lambda-linear coefficients ------------------------------------------------------


@given(lambda_linears, lambda_linears, field_elements)
def test_lambda_linear_is_a_vector_space(x, y, s):
    assert x + y == y + x
    assert s * (x + y) == s * x + s * y
    assert x - x == 0
    assert (x + 0) == x


def test_lambda_products_refused():
    with pytest.raises(QuadraticLambdaError):
        lam(0) * lam(1)
    with pytest.raises(QuadraticLambdaError):
        wedge(dual("H1", lam(0)), dual("H2", lam(1)))


def test_lambda_render():
    x = LambdaLinear.from_terms({3: "1/6", 5: "-1/4", 6: "1/12"})
    assert x.render() == "1/6 λ3 - 1/4 λ5 + 1/12 λ6"
    assert (I * lam(2) - 6 * I * lam(1)).render() == "-6*i λ1 + i λ2"


@given(lambda_linears, st.lists(small_fractions, min_size=7, max_size=7))
def test_evaluate_is_linear(x, vals):
    assert (2 * x).evaluate(vals) == 2 * x.evaluate(vals)


def test_mixed_coefficient_kinds_rejected():
    with pytest.raises((TypeError, ValueError)):
        InvariantForm(1, {(0,): ONE, (1,): lam(0)})


# -- wedge and d ----------------------------------------------------------------------


def test_sign_normalization():
    f = InvariantForm.from_unsorted(2, [(("E1bar", "E1"), ONE)])
    assert f.terms == {parse_labels(["E1", "E1bar"]): -ONE}
    assert f.coefficient(("E1bar", "E1")) == ONE


@given(forms(1), forms(2), forms(1))
def test_wedge_associative_and_graded(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))
    assert wedge(a, c) == -wedge(c, a)
    assert wedge(a, b) == wedge(b, a)


@given(forms(1), forms(2))
def test_anti_derivation(a, b):
    assert d(wedge(a, b)) == wedge(d(a), b) - wedge(a, d(b))
    assert d(wedge(b, a)) == wedge(d(b), a) + wedge(b, d(a))


def test_d_squared_zero_on_dual_basis():
    for k in range(14):
        assert not d(d_one_form(k))


@given(forms(2))
def test_d_squared_zero_on_two_forms(a):
    assert not d(d(a))


@given(forms(2))
def test_d_commutes_with_conjugation(a):
    assert d(a.conjugate()) == d(a).conjugate()


@given(forms(1), forms(2))
def test_j_action_is_an_algebra_map(a, b):
    assert j_action(wedge(a, b)) == wedge(j_action(a), j_action(b))


def test_j_action_squares_to_sign():
    # J^2 = -1 on 1-forms, so it acts by (-1)^p on p-forms
    for k in range(14):
        assert j_action(j_action(dual(k))) == -dual(k)


def test_d_table_matches_reference():
    for name, terms in tables.D_TABLE.items():
        expected = InvariantForm.from_unsorted(2, [(labels, parse_scalar(c)) for c, labels in terms])
        assert d_one_form(name) == expected, name


# -- independent Chevalley-Eilenberg oracle -------------------------------------------


def _evaluate2(alpha, x, y):
    """alpha on two vectors given as {label: coeff} dicts."""
    s = ZERO
    for p, a in x.items():
        for q, b in y.items():
            if p != q:
                s = s + a * b * alpha.coefficient((p, q))
    return s


def _ce_d2(alpha):
    """(d alpha)(e_p, e_q, e_r) = -alpha([e_p,e_q], e_r) + alpha([e_p,e_r], e_q) - alpha([e_q,e_r], e_p)."""
    t = complex_bracket_table()
    terms = {}
    for p, q, r in combinations(range(14), 3):
        v = (
            -_evaluate2(alpha, t.relation(p, q), {r: ONE})
            + _evaluate2(alpha, t.relation(p, r), {q: ONE})
            - _evaluate2(alpha, t.relation(q, r), {p: ONE})
        )
        if v:
            terms[(p, q, r)] = v
    return InvariantForm(3, terms)


@given(forms(2))
def test_d_matches_chevalley_eilenberg_formula(a):
    assert d(a) == _ce_d2(a)


def test_chevalley_eilenberg_on_fundamental_form_shape():
    omega = wedge(dual("H1"), dual("H2")) + wedge(dual("E1", I), dual("E1bar"))
    assert d(omega) == _ce_d2(omega)
