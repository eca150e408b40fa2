from fractions import Fraction

import numpy as np
from hypothesis import given, settings

from g2skt.algebra import DIM, AlgebraElement, basis_element
from g2skt.g2 import (
    build_g2_basis,
    build_phi,
    coordinates_in_basis,
    cross,
    elementary,
    evaluate_form,
    g2_bracket_table,
    g2_membership,
    inner,
    linearized_invariance_rows,
    linearized_solution_space,
    mat_add,
    mat_scale,
    membership_constraint_rows,
    phi_contraction_scalar,
    solution_space_dimension,
    unit_vector,
    vector,
)
from g2skt.linalg import leading_pivots, rank, rref

from conftest import g2_coords, rational_vectors


@settings(max_examples=10)
@given(rational_vectors, rational_vectors)
def test_phi_contraction_identity(u, v):
    u, v = vector(u), vector(v)
    assert phi_contraction_scalar(u, v) == -6 * inner(u, v)


@given(rational_vectors, rational_vectors)
def test_cross_product_laws(u, v):
    u, v = vector(u), vector(v)
    w = cross(u, v)
    assert inner(w, w) == inner(u, u) * inner(v, v) - inner(u, v) ** 2
    assert cross(u, w) == tuple(-inner(u, u) * b + inner(u, v) * a for a, b in zip(u, v))
    assert inner(w, u) == 0 and inner(w, v) == 0


@given(rational_vectors, rational_vectors, rational_vectors)
def test_cross_product_agrees_with_phi_evaluation(u, v, z):
    # <u x v, z> = phi(u, v, z), via a second, evaluation-based route
    u, v, z = vector(u), vector(v), vector(z)
    assert inner(cross(u, v), z) == evaluate_form(build_phi(), [u, v, z])


def test_phi_has_seven_terms():
    assert len(build_phi().terms) == 7


def test_dimension_fourteen():
    assert rank(membership_constraint_rows()) == 7
    assert solution_space_dimension() == 14


def test_two_routes_to_the_constraints_agree():
    # the stated linear relations and the linearized invariance of phi cut out the same space
    assert rref(linearized_invariance_rows()) and len(linearized_solution_space()) == 14
    basis = build_g2_basis()
    for X in basis.elements:
        flat = [X[i][j] for i in range(7) for j in range(7)]
        for row in linearized_invariance_rows():
            assert sum(c * flat[k] for k, c in row.items()) == 0


def test_basis_members_and_independent():
    basis = build_g2_basis()
    assert all(g2_membership(X) for X in basis.elements)
    assert basis.is_independent()


def test_non_member_rejected():
    assert not g2_membership(mat_add(elementary(1, 2), elementary(2, 1), -1))


@given(g2_coords)
def test_coordinates_round_trip(coords):
    basis = build_g2_basis()
    X = [[Fraction(0)] * 7 for _ in range(7)]
    for k, c in enumerate(coords, start=1):
        X = mat_add(X, mat_scale(c, basis[k]))
    assert g2_membership(X)
    got = coordinates_in_basis(X, basis)
    assert all(got.get(k, 0) == c for k, c in enumerate(coords, start=1))


@given(g2_coords, g2_coords, g2_coords)
def test_jacobi_on_random_elements(x, y, z):
    t = g2_bracket_table()
    x, y, z = AlgebraElement(x), AlgebraElement(y), AlgebraElement(z)
    s = t.bracket(t.bracket(x, y), z) + t.bracket(t.bracket(y, z), x) + t.bracket(t.bracket(z, x), y)
    assert not s


@given(g2_coords, g2_coords, g2_coords)
def test_killing_is_ad_invariant(x, y, z):
    t = g2_bracket_table()
    x, y, z = AlgebraElement(x), AlgebraElement(y), AlgebraElement(z)
    assert t.killing_form(t.bracket(x, y), z) == -t.killing_form(y, t.bracket(x, z))


@given(g2_coords, g2_coords)
def test_killing_two_routes(x, y):
    t = g2_bracket_table()
    x, y = AlgebraElement(x), AlgebraElement(y)
    assert t.killing_form(x, y) == t.killing_form_from_ad(x, y)


def test_killing_negative_definite():
    K = g2_bracket_table().killing_matrix
    piv = leading_pivots([[-v for v in r] for r in K])
    assert len(piv) == DIM and all(p > 0 for p in piv)
    assert K[0][0] == -16


def test_killing_matches_float_trace():
    # independent float route: trace of products of the 7x7 ad matrices
    t = g2_bracket_table()
    ad = np.array([[[float(v) for v in r] for r in t.ad_matrix(basis_element(k))] for k in range(1, DIM + 1)])
    K = np.einsum("iab,jba->ij", ad, ad)
    assert np.allclose(K, np.array(t.killing_matrix, dtype=float))
