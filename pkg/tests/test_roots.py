from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st

from g2skt.algebra import DIM, AlgebraElement, basis_element
from g2skt.g2 import g2_bracket_table
from g2skt.roots import (
    LABELS,
    Root,
    build_complex_basis,
    change_of_basis,
    complex_bracket_table,
    conjugate_label,
    from_complex_coords,
    killing_complex_pairings,
    label_index,
    to_complex_coords,
    verify_root_vector,
)
from g2skt.scalars import I, ONE, ZERO

from conftest import g2_coords


def _root_of_label(k):
    basis = build_complex_basis()
    if k < 2:
        return Root(ZERO, ZERO)
    if k < 8:
        return basis.roots[k - 2]
    return -basis.roots[k - 8]


def test_labels():
    assert len(LABELS) == 14
    assert LABELS[label_index("E3bar")] == "E3bar"
    assert all(conjugate_label(conjugate_label(k)) == k for k in range(14))
    assert conjugate_label(label_index("E1")) == label_index("E1bar")
    with pytest.raises(ValueError):
        label_index("E7")


def test_root_vectors_and_conjugates():
    basis = build_complex_basis()
    for E, Eb, alpha in zip(basis.E, basis.Ebar, basis.roots):
        assert verify_root_vector(E, alpha)
        assert verify_root_vector(Eb, -alpha)
        assert not verify_root_vector(E, -alpha)


def test_root_must_be_imaginary():
    with pytest.raises(ValueError):
        Root(ONE, I)


def test_roots_match_float_spectrum():
    # eigenvalues of ad(b1) and ad(b12), computed numerically, are the root values plus two zeros
    t = g2_bracket_table()
    basis = build_complex_basis()
    for slot, h in ((0, 1), (1, 12)):
        ad = np.array([[complex(float(v.components[0]), float(v.components[2])) for v in r] for r in t.ad_matrix(basis_element(h))])
        eig = Counter(round(complex(x).imag) for x in np.linalg.eigvals(ad))
        vals = [r.value_on_b1 if slot == 0 else r.value_on_b12 for r in basis.roots]
        expected = Counter([0, 0] + [int(v.components[2]) for v in vals] + [-int(v.components[2]) for v in vals])
        assert eig == expected


def test_complex_table_conjugation_symmetric():
    t = complex_bracket_table()
    assert t == t.conjugated()
    assert len(t.constants) == 56


def test_complex_brackets_respect_root_grading():
    t = complex_bracket_table()
    for p in range(14):
        for q in range(p + 1, 14):
            total = _root_of_label(p) + _root_of_label(q)
            for k in t.relation(p, q):
                assert _root_of_label(k) == total


def test_change_of_basis_inverse():
    to_c, from_c = change_of_basis()
    for i in range(DIM):
        for j in range(DIM):
            s = sum((to_c[i][k] * from_c[k][j] for k in range(DIM)), ZERO)
            assert s == (1 if i == j else 0)


@given(g2_coords)
def test_complex_coordinates_round_trip(x):
    x = AlgebraElement(x)
    assert from_complex_coords(to_complex_coords(x)) == x


def test_killing_pairings_pattern():
    pair = killing_complex_pairings()
    for (p, q), v in pair.items():
        if p >= 2:
            assert q == conjugate_label(p)
    values = Counter(pair[(label_index(f"E{j}"), label_index(f"E{j}bar"))] for j in range(1, 7))
    assert set(values) <= {-16, -32, -96}
    assert pair[(label_index("E1"), label_index("E1bar"))] == -32
    assert pair[(0, 0)] == -16
