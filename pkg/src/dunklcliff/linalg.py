"""Exact linear algebra over the rationals.

Kernel computation clears denominators row-wise and then runs fraction-free
(Bareiss) elimination, so every intermediate entry is an integer; back
substitution reintroduces fractions only in the final kernel vectors.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _integer_rows(rows: list[list[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        denom = lcm(*(f.denominator for f in row)) if row else 1
        scaled = [int(f * denom) for f in row]
        g = 0
        for v in scaled:
            g = gcd(g, abs(v))
        if g > 1:
            scaled = [v // g for v in scaled]
        out.append(scaled)
    return out


def row_echelon_fraction_free(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Bareiss elimination in place; returns (matrix, pivot column list)."""
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: list[int] = []
    prev_pivot = 1
    r = 0
    for c in range(n_cols):
        sel = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if sel is None:
            continue
        if sel != r:
            rows[r], rows[sel] = rows[sel], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, n_rows):
            if not any(rows[i][c:]):
                continue
            factor = rows[i][c]
            for j in range(n_cols):
                rows[i][j] = (rows[i][j] * pivot - factor * rows[r][j]) // prev_pivot
        pivots.append(c)
        prev_pivot = pivot
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def nullspace(rows: list[list[Fraction]], n_cols: int) -> list[list[Fraction]]:
    """Basis of {v : A v = 0} for the matrix with the given rows.

    An empty row list means the whole space is the kernel.
    """
    if not rows:
        return [
            [Fraction(1) if j == i else Fraction(0) for j in range(n_cols)]
            for i in range(n_cols)
        ]
    mat = _integer_rows(rows)
    mat, pivots = row_echelon_fraction_free(mat)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        v = [Fraction(0)] * n_cols
        v[free] = Fraction(1)
        # rows are in echelon form: solve pivots bottom-up
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = sum((Fraction(mat[r][j]) * v[j] for j in range(c + 1, n_cols)), Fraction(0))
            v[c] = -s / mat[r][c]
        basis.append(v)
    return basis


def rank(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    mat = _integer_rows(rows)
    _, pivots = row_echelon_fraction_free(mat)
    return len(pivots)
