"""Small exact linear-algebra helpers over the rationals.

Systems here are tiny (support sets have at most ~10 curves), so plain
Gaussian elimination with Fractions is both exact and fast enough.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction]]


def solve(matrix: Matrix, rhs_columns: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Solve A x = b for several right-hand sides at once.

    Returns one solution vector per entry of `rhs_columns`. Raises
    ValueError if the matrix is singular.
    """
    n = len(matrix)
    m = len(rhs_columns)
    aug = [list(matrix[i]) + [col[i] for col in rhs_columns] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise ValueError("singular matrix")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for r in range(n):
            if r == col:
                continue
            factor = aug[r][col] / pivot
            if factor == 0:
                continue
            for c in range(col, n + m):
                aug[r][c] -= factor * aug[col][c]
    return [[aug[i][n + j] / aug[i][i] for i in range(n)] for j in range(m)]


def determinant(matrix: Matrix) -> Fraction:
    n = len(matrix)
    a = [list(row) for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            det = -det
        pivot = a[col][col]
        det *= pivot
        for r in range(col + 1, n):
            factor = a[r][col] / pivot
            if factor != 0:
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    return det


def is_negative_definite(matrix: Matrix) -> bool:
    """Exact test via alternating leading principal minors.

    A symmetric matrix G is negative definite iff (-1)^k det(G_k) > 0 for
    every leading principal k x k block G_k.
    """
    n = len(matrix)
    if n == 0:
        return True
    sign = -1
    for k in range(1, n + 1):
        minor = determinant([row[:k] for row in matrix[:k]])
        if sign * minor <= 0:
            return False
        sign = -sign
    return True
