"""Exact linear algebra over Fraction matrices (dense, desk scale)."""

from __future__ import annotations

from fractions import Fraction


def _rref(rows, ncols):
    """In-place reduced row echelon form; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(a) -> int:
    if not a:
        return 0
    rows = [[Fraction(x) for x in row] for row in a]
    return len(_rref(rows, len(rows[0])))


def solve_many(a, bs):
    """Solve a x = b for each column b in bs, sharing one elimination.

    Returns a list with one solution (list of Fractions, free variables 0)
    per right-hand side, or None in place of any inconsistent system.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    k = len(bs)
    rows = [
        [Fraction(x) for x in a[i]] + [Fraction(b[i]) for b in bs] for i in range(m)
    ]
    pivots = _rref(rows, n)
    sols = []
    for t in range(k):
        col = n + t
        if any(rows[i][col] for i in range(len(pivots), m)):
            sols.append(None)
            continue
        x = [Fraction(0)] * n
        for r, c in enumerate(pivots):
            x[c] = rows[r][col]
        sols.append(x)
    return sols


def solve(a, b):
    """Solve a x = b exactly; None when inconsistent."""
    if not a:
        return [] if not b or not any(b) else None
    return solve_many(a, [b])[0]
