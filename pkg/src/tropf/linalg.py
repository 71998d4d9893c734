"""Exact integer/rational matrix helpers.

Matrices are tuples of row tuples. Nothing here touches floating point.
"""

from fractions import Fraction
from math import gcd

from .errors import DimensionError


def as_matrix(rows):
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionError("matrix rows have different lengths")
    return rows


def shape(a):
    return len(a), (len(a[0]) if a else 0)


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(r, c):
    return tuple((0,) * c for _ in range(r))


def transpose(a):
    return tuple(zip(*a)) if a else ()


def matmul(a, b):
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise DimensionError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    if a and len(a[0]) != len(v):
        raise DimensionError(f"cannot apply {len(a)}x{len(a[0])} matrix to vector of length {len(v)}")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def scale_rows(diag, a):
    """diag(d) * a."""
    return tuple(tuple(d * x for x in row) for d, row in zip(diag, a))


def neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def hstack(*blocks):
    return tuple(sum((tuple(b[i]) for b in blocks), ()) for i in range(len(blocks[0])))


def vstack(*blocks):
    return tuple(r for b in blocks for r in b)


def is_skew_symmetric(a):
    n, c = shape(a)
    return n == c and all(a[i][j] == -a[j][i] for i in range(n) for j in range(n))


def _echelon(a):
    """Row-reduce a copy of ``a`` over Q. Returns (reduced rows, pivot columns)."""
    rows = [[Fraction(x) for x in r] for r in a]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(a):
    if not a or not a[0]:
        return 0
    return len(_echelon(a)[1])


def det(a):
    """Bareiss fraction-free determinant."""
    n, c = shape(a)
    if n != c:
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse(a):
    """Inverse over Q of a square matrix, or None when singular."""
    n, c = shape(a)
    if n != c:
        raise DimensionError("inverse of a non-square matrix")
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(a)]
    rows, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        return None
    return tuple(tuple(r[n:]) for r in rows[:n])


def left_inverse(a):
    """For an m x n matrix of full column rank, an n x m rational matrix L with L a = I.

    Built from n linearly independent rows; returns None if the rank is short.
    """
    m, n = shape(a)
    _, pivots = _echelon(transpose(a))
    if len(pivots) < n:
        return None
    sub = tuple(a[i] for i in pivots)
    inv = inverse(sub)
    out = [[Fraction(0)] * m for _ in range(n)]
    for col, i in enumerate(pivots):
        for r in range(n):
            out[r][i] = inv[r][col]
    return tuple(tuple(r) for r in out)


def lcm(a, b):
    return a * b // gcd(a, b)
