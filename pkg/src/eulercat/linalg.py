"""Exact Gauss-Jordan elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[list]:
    """One exact solution of ``matrix @ x = rhs``, or None if inconsistent.

    Free variables of an underdetermined system are set to zero. Pivots are
    taken column by column, first nonzero row, so the result is a pure
    function of the input.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            for j in range(c, n + 1):
                if prow[j]:
                    prow[j] *= inv
        nz = [j for j in range(c, n + 1) if prow[j]]
        for i in range(m):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
        if r == m:
            break
    if any(rows[i][n] for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    return x


def rank(matrix: Sequence[Sequence]) -> int:
    """Exact rank by row reduction."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(r + 1, m):
            f = rows[i][c] / rows[r][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r
