"""Small exact integer matrix routines.

Matrices are tuples (or lists) of integer rows.  Everything here works on
Python ints, so there is no overflow and no rounding.
"""

from __future__ import annotations

import itertools
from math import gcd
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*a))


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
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
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def adjugate(a: Sequence[Sequence[int]]) -> Matrix:
    n = len(a)
    if n == 1:
        return ((1,),)
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(map(list, a)) if k != i]
            cof[i][j] = (-1) ** (i + j) * det(minor)
    return transpose(cof)


def unimodular_inverse(a: Sequence[Sequence[int]]) -> Matrix:
    d = det(a)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det={d})")
    return tuple(tuple(d * x for x in row) for row in adjugate(a))


def minors_gcd(rows: Sequence[Sequence[int]]) -> int:
    """gcd of all maximal minors of a k x d matrix (k <= d).

    The rows extend to a unimodular d x d matrix exactly when this is 1.
    """
    k = len(rows)
    if k == 0:
        return 1
    d = len(rows[0])
    g = 0
    for cols in itertools.combinations(range(d), k):
        g = gcd(g, det([[row[c] for c in cols] for row in rows]))
        if g == 1:
            return 1
    return g


def row_echelon(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, int]:
    """Row echelon form over the integers.

    Returns ``(H, U, rank)`` with ``H == U @ a``, ``U`` unimodular and the
    nonzero rows of ``H`` on top.  Only Euclidean row operations are used.
    """
    h = [list(row) for row in a]
    n = len(h)
    m = len(h[0]) if n else 0
    u = [list(row) for row in identity(n)]
    r = 0
    for c in range(m):
        if r == n:
            break
        for i in range(r + 1, n):
            while h[i][c] != 0:
                q = h[r][c] // h[i][c]
                if q:
                    h[r] = [x - q * y for x, y in zip(h[r], h[i])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[i])]
                h[r], h[i] = h[i], h[r]
                u[r], u[i] = u[i], u[r]
        if h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            r += 1
    return as_matrix(h), as_matrix(u), r
