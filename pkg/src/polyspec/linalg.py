"""Exact linear algebra on the small matrices this package needs.

Determinants use fraction-free (Bareiss) elimination on integer matrices, so
every intermediate value stays an integer and every division is exact. Square
systems are solved by Cramer's rule on denominator-cleared rows; at the sizes
that occur here (n up to ~10) this is both fast enough and free of pivoting
surprises.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from typing import Sequence

from .exact import RatLike


def det_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    m = [[operator.index(x) for x in row] for row in rows]
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact division: Bareiss guarantees divisibility by prev.
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _cleared_rows(
    a: Sequence[Sequence[RatLike]], b: Sequence[RatLike]
) -> tuple[list[list[int]], list[int]]:
    """Scale each augmented row by the lcm of its denominators."""
    a_int: list[list[int]] = []
    b_int: list[int] = []
    for row, rhs in zip(a, b, strict=True):
        fracs = [Fraction(x) for x in row] + [Fraction(rhs)]
        scale = math.lcm(*(f.denominator for f in fracs))
        ints = [int(f * scale) for f in fracs]
        a_int.append(ints[:-1])
        b_int.append(ints[-1])
    return a_int, b_int


def solve_exact(
    a: Sequence[Sequence[RatLike]], b: Sequence[RatLike]
) -> list[Fraction]:
    """Solve the square system a x = b exactly.

    Raises ValueError if the matrix is singular. Row scaling by denominator
    lcms keeps all determinant work in integers.
    """
    n = len(a)
    if len(b) != n:
        raise ValueError("right-hand side length must match matrix size")
    a_int, b_int = _cleared_rows(a, b)
    d = det_bareiss(a_int)
    if d == 0:
        raise ValueError("singular matrix")
    solution = []
    for col in range(n):
        replaced = [
            row[:col] + [b_int[i]] + row[col + 1 :] for i, row in enumerate(a_int)
        ]
        solution.append(Fraction(det_bareiss(replaced), d))
    return solution


def rank_exact(rows: Sequence[Sequence[RatLike]]) -> int:
    """Rank of a rectangular matrix over the rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    n_cols = len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot_row = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, len(m)):
            if m[i][col] == 0:
                continue
            factor = m[i][col] / pivot
            for j in range(col, n_cols):
                m[i][j] -= factor * m[rank][j]
        rank += 1
        if rank == len(m):
            break
    return rank
