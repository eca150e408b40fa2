from itertools import combinations

from hypothesis import given

from g2skt import tables
from g2skt.algebra import DIM, AlgebraElement, basis_element
from g2skt.g2 import g2_bracket_table
from g2skt.roots import build_complex_basis
from g2skt.samelson import ComplexStructure, build_samelson, check_killing_compatible, nijenhuis
from g2skt.scalars import I, ZERO, parse_scalar

from conftest import g2_coords


def test_square_and_reality():
    J = build_samelson()
    assert J.is_real()
    assert J.squares_to_minus_identity()


def test_matches_reference_display():
    J = build_samelson()
    for k, image in tables.SAMELSON_REAL.items():
        assert J.image(k) == {r: parse_scalar(c) for r, c in image.items()}


def test_eigenvectors_directly():
    # second route: act on the complex basis vectors without any change-of-basis matrix
    J, basis = build_samelson(), build_complex_basis()
    assert J(basis.H1) == basis.H2
    assert J(basis.H2) == -basis.H1
    for E, Eb in zip(basis.E, basis.Ebar):
        assert J(E) == I * E
        assert J(Eb) == -I * Eb


def test_nijenhuis_vanishes_on_basis_pairs():
    J = build_samelson()
    for i, j in combinations(range(1, DIM + 1), 2):
        assert not nijenhuis(J, basis_element(i), basis_element(j))


def test_holomorphic_subalgebra_closed():
    # integrability via the i-eigenspace: brackets of (1,0)-vectors stay (1,0)
    J, basis, t = build_samelson(), build_complex_basis(), g2_bracket_table()
    hol = [basis.H1 - I * basis.H2, *basis.E]
    for X, Y in combinations(hol, 2):
        Z = t.bracket(X, Y)
        assert J(Z) == I * Z


@given(g2_coords, g2_coords)
def test_killing_compatible_on_random_pairs(x, y):
    J, t = build_samelson(), g2_bracket_table()
    x, y = AlgebraElement(x), AlgebraElement(y)
    assert t.killing_form(J(x), J(y)) == t.killing_form(x, y)


def test_killing_compatible_on_basis():
    assert check_killing_compatible(build_samelson())


def test_rotated_cartan_variant_fails_killing_compatibility():
    # send b1 -> b12, b12 -> -b1 and keep the root-space action
    m = [list(r) for r in build_samelson().matrix]
    for r in range(DIM):
        m[r][0] = ZERO
        m[r][11] = ZERO
    m[11][0] = m[11][0] + 1
    m[0][11] = m[0][11] - 1
    variant = ComplexStructure(tuple(map(tuple, m)))
    assert variant.squares_to_minus_identity()
    assert not check_killing_compatible(variant)
