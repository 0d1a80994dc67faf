"""Exact Gaussian elimination over any field with Python operators."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _inverse(x):
    if hasattr(x, "inverse"):
        return x.inverse()
    return 1 / Fraction(x)


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns (input untouched)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = _inverse(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1])


def solve(columns: Sequence[Sequence], target: Sequence):
    """Coefficients x with sum x_k columns[k] = target, or None if inconsistent."""
    k = len(columns)
    n = len(target)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    red, pivots = row_echelon(aug)
    if k in pivots:
        return None
    x = [0] * k
    for row, c in zip(red, pivots):
        x[c] = row[k]
    return x
