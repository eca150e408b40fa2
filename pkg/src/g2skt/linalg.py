"""Exact linear algebra over Q or Q(sqrt3, i).

Scalars are duck-typed: anything closed under ``+ - * /`` with exact
equality and truthiness meaning "nonzero" works, so the same routines serve
``Fraction`` and ``FieldElement`` entries.  Rows are held sparsely as
``{column: value}`` dicts because every system in this package is sparse.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from .scalars import ONE, ZERO, FieldElement

__all__ = [
    "SparseRow",
    "rref",
    "rank",
    "nullspace",
    "matmul",
    "transpose",
    "identity",
    "inverse",
    "leading_pivots",
    "dedupe_rows",
]

SparseRow = dict[int, object]


def _exact(v):
    return Fraction(v) if isinstance(v, int) else v


def _sparse(row) -> SparseRow:
    items = row.items() if isinstance(row, dict) else enumerate(row)
    return {j: _exact(v) for j, v in items if v}


def dedupe_rows(rows: Iterable[SparseRow]) -> list[SparseRow]:
    """Drop zero rows and exact duplicates (up to overall scaling)."""
    seen: set = set()
    out: list[SparseRow] = []
    for row in rows:
        row = _sparse(row)
        if not row:
            continue
        lead = row[min(row)]
        key = tuple(sorted((j, v / lead) for j, v in row.items()))
        if key in seen:
            continue
        seen.add(key)
        out.append(row)
    return out


def rref(rows: Iterable, column_order: Sequence[int] | None = None) -> list[tuple[int, SparseRow]]:
    """Reduced row echelon form with first-nonzero pivoting.

    Columns are visited in ``column_order`` (default: ascending), which fixes
    which variables become pivots.  Returns ``[(pivot_col, row), ...]`` with
    each row normalized to 1 at its pivot and zero at every other pivot.
    """
    pending = [r for r in (_sparse(r) for r in rows) if r]
    if column_order is None:
        cols: set[int] = set()
        for r in pending:
            cols.update(r)
        column_order = sorted(cols)
    reduced: list[tuple[int, SparseRow]] = []
    for col in column_order:
        idx = next((k for k, r in enumerate(pending) if col in r), None)
        if idx is None:
            continue
        prow = pending.pop(idx)
        inv = 1 / prow[col]
        prow = {j: v * inv for j, v in prow.items()}

        def eliminate(r: SparseRow) -> SparseRow:
            f = r.get(col)
            if not f:
                return r
            out = dict(r)
            for j, v in prow.items():
                nv = out.get(j, 0) - f * v
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
            return out

        pending = [r for r in (eliminate(r) for r in pending) if r]
        reduced = [(c, eliminate(r)) for c, r in reduced]
        reduced.append((col, prow))
    if pending:
        # rows with support outside column_order
        raise ValueError("column_order does not cover every column in the system")
    return reduced


def rank(rows: Iterable) -> int:
    return len(rref(rows))


def nullspace(rows: Iterable, ncols: int, column_order: Sequence[int] | None = None) -> list[list]:
    """Basis of the solution space of ``rows @ x = 0``; one vector per free column."""
    order = list(column_order) if column_order is not None else list(range(ncols))
    red = rref(rows, order)
    pivots = {c for c, _ in red}
    basis = []
    for free in order:
        if free in pivots:
            continue
        vec: list = [0] * ncols
        vec[free] = 1
        for c, r in red:
            v = r.get(free)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for k in range(p):
            s = 0
            for j in range(m):
                a = Ai[j]
                if a:
                    b = B[j][k]
                    if b:
                        s = s + a * b
            row.append(s)
        out.append(row)
    return out


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*A)]


def identity(n: int, one=ONE, zero=ZERO) -> list[list]:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def inverse(A: Sequence[Sequence]) -> list[list]:
    n = len(A)
    aug = [{**_sparse(list(A[i])), n + i: ONE} for i in range(n)]
    red = rref(aug, list(range(2 * n)))
    if len(red) < n or any(c >= n for c, _ in red[:n]):
        raise ZeroDivisionError("matrix is singular")
    out = [[ZERO] * n for _ in range(n)]
    for c, r in red:
        for j, v in r.items():
            if j >= n:
                out[c][j - n] = v if isinstance(v, FieldElement) else FieldElement(v)
    return out


def leading_pivots(A: Sequence[Sequence]) -> list:
    """Pivots of Gaussian elimination without row exchanges.

    The k-th leading principal minor equals the product of the first k
    pivots; elimination stops at the first zero pivot (the returned list is
    then shorter than ``len(A)`` and ends with that zero).
    """
    n = len(A)
    M = [list(r) for r in A]
    pivots = []
    for k in range(n):
        p = M[k][k]
        pivots.append(p)
        if not p:
            break
        for i in range(k + 1, n):
            f = M[i][k]
            if f:
                f = f / p
                Mi, Mk = M[i], M[k]
                for j in range(k, n):
                    if Mk[j]:
                        Mi[j] = Mi[j] - f * Mk[j]
    return pivots


def to_fraction_rows(rows: Iterable[SparseRow]) -> list[SparseRow]:
    """Split FieldElement rows into rational rows, one per nonzero unit component."""
    out: list[SparseRow] = []
    for row in rows:
        parts: list[SparseRow] = [{}, {}, {}, {}]
        for j, v in row.items():
            comps = v.components if isinstance(v, FieldElement) else (Fraction(v), 0, 0, 0)
            for k, q in enumerate(comps):
                if q:
                    parts[k][j] = q
        out.extend(p for p in parts if p)
    return out
