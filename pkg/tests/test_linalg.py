from fractions import Fraction
from math import prod

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from g2skt.linalg import dedupe_rows, inverse, leading_pivots, matmul, nullspace, rank, rref, to_fraction_rows
from g2skt.scalars import I, ONE, SQRT3, ZERO, FieldElement

from conftest import field_elements, small_fractions

matrices = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 6).flatmap(lambda m: st.lists(st.lists(small_fractions, min_size=m, max_size=m), min_size=n, max_size=n))
)
square = st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small_fractions, min_size=n, max_size=n), min_size=n, max_size=n))


@given(matrices)
def test_rank_matches_sympy(A):
    assert rank(A) == sympy.Matrix(A).rank()


@given(matrices)
def test_nullspace_is_kernel(A):
    ncols = len(A[0])
    basis = nullspace(A, ncols)
    assert len(basis) + rank(A) == ncols
    for v in basis:
        for row in A:
            assert sum(a * b for a, b in zip(row, v)) == 0


@given(matrices, st.randoms(use_true_random=False))
def test_column_order_chooses_pivots(A, rnd):
    order = list(range(len(A[0])))
    rnd.shuffle(order)
    red = rref(A, order)
    # rank is independent of the pivot order; each pivot column is a unit column
    assert len(red) == rank(A)
    for c, row in red:
        assert row[c] == 1
        assert all(c not in other for c2, other in red if c2 != c)


@given(square)
def test_inverse_over_rationals(A):
    assume(sympy.Matrix(A).det() != 0)
    Ainv = inverse(A)
    n = len(A)
    P = matmul([[FieldElement(x) for x in r] for r in A], Ainv)
    assert all(P[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


@given(st.lists(field_elements, min_size=4, max_size=4))
def test_inverse_over_field(entries):
    A = [entries[:2], entries[2:]]
    det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    assume(det != 0)
    P = matmul(A, inverse(A))
    assert P == [[ONE, ZERO], [ZERO, ONE]]


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        inverse([[ONE, SQRT3], [SQRT3, FieldElement(3)]])


@given(square)
def test_leading_pivots_give_minors(A):
    piv = leading_pivots([[Fraction(x) for x in r] for r in A])
    M = sympy.Matrix(A)
    for k in range(1, len(piv) + 1):
        assert prod(piv[:k]) == M[:k, :k].det()


def test_to_fraction_rows_splits_components():
    rows = to_fraction_rows([{0: FieldElement(1, 0, 2), 1: I}])
    assert sorted(map(lambda r: tuple(sorted(r.items())), rows)) == [((0, 1),), ((0, 2), (1, 1))]


def test_dedupe_rows_up_to_scaling():
    rows = dedupe_rows([{0: 1, 1: 2}, {0: 2, 1: 4}, {}, {1: 1}])
    assert len(rows) == 2
