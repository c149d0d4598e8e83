"""Exact Gaussian elimination over rationals."""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)


def solve_exact(rows, rhs):
    """Solve A x = b exactly over the rationals.

    `rows` is a list of equal-length coefficient lists, `rhs` the matching
    right-hand sides. Returns ``(kind, solution)`` where kind is one of
    ``"unique"``, ``"none"`` or ``"many"``; for consistent systems the
    solution is a particular one with every free variable set to zero.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]

    pivot_cols = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivot_cols.append(c)
        r += 1
        if r == m:
            break

    for i in range(r, m):
        if a[i][n]:
            return "none", None

    solution = [_ZERO] * n
    for row, c in enumerate(pivot_cols):
        solution[c] = a[row][n]
    kind = "unique" if len(pivot_cols) == n else "many"
    return kind, solution
