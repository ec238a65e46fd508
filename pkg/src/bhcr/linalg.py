"""Exact integer/rational linear algebra for small square matrices."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def det(m: Matrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _minor(m: Matrix, row: int, col: int) -> Matrix:
    return tuple(
        tuple(x for j, x in enumerate(r) if j != col)
        for i, r in enumerate(m)
        if i != row
    )


@lru_cache(maxsize=256)
def adjugate(m: Matrix) -> Matrix:
    """Integer adjugate, so that ``m @ adjugate(m) == det(m) * I``."""
    n = len(m)
    if n == 1:
        return ((1,),)
    return tuple(
        tuple((-1) ** (i + j) * det(_minor(m, j, i)) for j in range(n))
        for i in range(n)
    )


@lru_cache(maxsize=256)
def inverse(m: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    d = det(m)
    if d == 0:
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(Fraction(x, d) for x in row) for row in adjugate(m))


def matvec(m, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def denominator_lcm(values) -> int:
    return lcm(*(Fraction(v).denominator for v in values)) if values else 1


def gcd_all(values) -> int:
    return gcd(*values) if values else 0
