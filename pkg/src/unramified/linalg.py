"""Exact dense linear algebra over the coefficient fields: row reduction,
rank, and kernel bases.  Rows are lists of FieldElement."""

from __future__ import annotations

from .fields import FieldDescriptor


def row_reduce(rows: list, ncols: int, field: FieldDescriptor) -> tuple:
    """Reduced row echelon form.  Returns (rref_rows, pivot_columns); the
    input is not modified.  Pivots are chosen as the first nonzero entry in
    column order, so the result is deterministic."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if not work[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][c].inverse()
        work[r] = [v * inv for v in work[r]]
        for i in range(len(work)):
            if i == r:
                continue
            factor = work[i][c]
            if factor.is_zero():
                continue
            work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: list, ncols: int, field: FieldDescriptor) -> int:
    return len(row_reduce(rows, ncols, field)[1])


def kernel_basis(rows: list, ncols: int, field: FieldDescriptor) -> list:
    """A basis of the right kernel {x : A x = 0}, one vector per free column,
    ordered by free column index."""
    rref, pivots = row_reduce(rows, ncols, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [field.zero()] * ncols
        vec[f] = field.one()
        for r, c in enumerate(pivots):
            vec[c] = -rref[r][f]
        basis.append(vec)
    return basis


def matmul(a: list, b: list, field: FieldDescriptor) -> list:
    """Plain matrix product of lists of rows."""
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimensions disagree")
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [field.zero()] * ncols
        for k, v in enumerate(row):
            if v.is_zero():
                continue
            brow = b[k]
            acc = [x + v * y for x, y in zip(acc, brow)]
        out.append(acc)
    return out
