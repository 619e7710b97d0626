"""Exact rational linear algebra: fraction-free echelon reduction, kernel
bases, and canonical row bases for subspace comparisons.

Pivoting is deterministic (first nonzero entry in column order, rows
scanned top to bottom) so every basis returned here is reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _to_int_rows(rows):
    """Scale each row by its denominator lcm; kernels and row spans survive."""
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in fr])
    return out


def echelon(rows):
    """Fraction-free (Bareiss) row echelon form of integer-scaled rows.

    Returns (echelon_rows, pivot_cols); echelon_rows has one row per pivot.
    """
    mat = _to_int_rows(rows)
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    prev = 1
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        piv = mat[r][col]
        for i in range(r + 1, len(mat)):
            fi = mat[i][col]
            row_i, row_r = mat[i], mat[r]
            for j in range(ncols):
                row_i[j] = (row_i[j] * piv - fi * row_r[j]) // prev
        prev = piv
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows) -> int:
    return len(echelon(rows)[1])


def kernel_basis(rows, ncols):
    """Deterministic basis of {x : M x = 0} for the matrix with the given rows.

    One vector per free column: 1 there, 0 at later free columns, pivot
    coordinates solved exactly by back substitution.
    """
    ech, pivots = echelon(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            acc = sum((ech[r][j] * vec[j] for j in range(pc + 1, ncols)), Fraction(0))
            vec[pc] = -acc / ech[r][pc]
        basis.append(vec)
    return basis


def reduced_row_basis(rows):
    """Canonical (reduced row echelon) basis of the row span; pivots are 1."""
    ech, pivots = echelon(rows)
    red = [[Fraction(x) for x in row] for row in ech]
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        lead = red[r][pc]
        red[r] = [x / lead for x in red[r]]
        for i in range(r):
            factor = red[i][pc]
            if factor:
                red[i] = [red[i][j] - factor * red[r][j] for j in range(len(red[i]))]
    return [tuple(row) for row in red]


def in_row_span(rows, vec) -> bool:
    base = rank(rows)
    return rank(list(rows) + [list(vec)]) == base


def span_contains(rows_a, rows_b) -> bool:
    """True when every row of rows_b lies in the span of rows_a."""
    base = rank(rows_a)
    return rank(list(rows_a) + [list(r) for r in rows_b]) == base


def span_equal(rows_a, rows_b) -> bool:
    return reduced_row_basis(rows_a) == reduced_row_basis(rows_b)
