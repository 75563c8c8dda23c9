"""Exact Gaussian elimination on lists of field elements."""

from __future__ import annotations

from typing import Sequence


def rref(rows: Sequence[Sequence]) -> tuple[list, list]:
    """Reduced row echelon form.

    Returns ``(nonzero_rows, pivot_columns)``. Input rows are not modified.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        prow = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                row = mat[i]
                mat[i] = [x - f * y for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    """Rank by forward elimination."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rk = 0
    for c in range(ncols):
        pivot = None
        for i in range(rk, len(mat)):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rk], mat[pivot] = mat[pivot], mat[rk]
        prow = mat[rk]
        inv = 1 / prow[c]
        for i in range(rk + 1, len(mat)):
            if mat[i][c]:
                f = mat[i][c] * inv
                mat[i] = [x - f * y for x, y in zip(mat[i], prow)]
        rk += 1
        if rk == len(mat):
            break
    return rk


def transpose(rows: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*rows)]


def is_invertible(rows: Sequence[Sequence]) -> bool:
    return len(rows) == len(rows[0]) and rank(rows) == len(rows)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    bt = transpose(b)
    out = []
    for row in a:
        out.append([sum((x * y for x, y in zip(row, col)), 0 * row[0]) for col in bt])
    return out
