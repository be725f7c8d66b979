"""Exact integer linear algebra.

Everything here works on Python ints, so there is no overflow and no
floating point.  Matrices are plain sequences of rows; vectors are tuples.
"""
from __future__ import annotations

from itertools import combinations
from math import gcd
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def _rows(m: Matrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in m]


def shape(m: Matrix) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for row in m:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def mat_vec(m: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def det(m: Matrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    a = _rows(m)
    n = len(a)
    if n == 0:
        return 1
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
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(m: Matrix) -> int:
    """Rank over the rationals, by fraction-free elimination."""
    a = _rows(m)
    if not a:
        return 0
    nrows, ncols = shape(a)
    r = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        for i in range(r + 1, nrows):
            f = a[i][col]
            a[i] = [(p * x - f * y) // prev for x, y in zip(a[i], a[r])]
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def hermite_rows(m: Matrix) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by the rows.

    Zero rows are dropped.  Pivots are positive and entries above a pivot are
    reduced into ``[0, pivot)``, so the result depends only on the lattice.
    """
    a = [row for row in _rows(m) if any(row)]
    if not a:
        return []
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        if r == len(a):
            break
        # Euclid on column `col` over rows r.. until a single nonzero remains.
        while True:
            nz = [i for i in range(r, len(a)) if a[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][col]))
            a[r], a[piv] = a[piv], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][col]:
                    q = a[i][col] // a[r][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][col]:
                        done = False
            if done:
                break
        if r < len(a) and a[r][col] != 0:
            if a[r][col] < 0:
                a[r] = [-x for x in a[r]]
            p = a[r][col]
            for i in range(r):
                q = a[i][col] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
    return [row for row in a[:r]]


def primitive_part(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def sign_normalize(v: Sequence[int]) -> tuple[int, ...]:
    """Flip ``v`` so that its first nonzero entry is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def kernel_basis(m: Matrix) -> list[tuple[int, ...]]:
    """Basis of the integer kernel ``{u : m u = 0}``.

    Row-reduces ``[m^T | I]`` with unimodular operations; the identity part of
    the rows whose ``m^T`` part vanishes spans the kernel lattice.  The basis
    is then put into Hermite normal form, which makes it canonical and gives
    each vector a positive leading entry.
    """
    nrows, ncols = shape(m)
    if ncols == 0:
        return []
    aug = []
    for j in range(ncols):
        row = [int(m[i][j]) for i in range(nrows)] + [0] * ncols
        row[nrows + j] = 1
        aug.append(row)
    r = 0
    for col in range(nrows):
        while True:
            nz = [i for i in range(r, ncols) if aug[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(aug[i][col]))
            aug[r], aug[piv] = aug[piv], aug[r]
            rest = False
            for i in range(r + 1, ncols):
                if aug[i][col]:
                    q = aug[i][col] // aug[r][col]
                    aug[i] = [x - q * y for x, y in zip(aug[i], aug[r])]
                    rest = rest or aug[i][col] != 0
            if not rest:
                break
        if r < ncols and aug[r][col] != 0:
            r += 1
    kernel = [row[nrows:] for row in aug[r:]]
    return [tuple(row) for row in hermite_rows(kernel)]


def max_abs_minor(m: Matrix, k: int) -> int:
    """Largest absolute value of a ``k x k`` minor, by exhaustive search."""
    nrows, ncols = shape(m)
    if k < 1 or k > min(nrows, ncols):
        raise ValueError(f"minor size {k} does not fit a {nrows}x{ncols} matrix")
    best = 0
    for rs in combinations(range(nrows), k):
        sub = [m[i] for i in rs]
        for cs in combinations(range(ncols), k):
            best = max(best, abs(det([[row[j] for j in cs] for row in sub])))
    return best


def independent_rows(m: Matrix) -> list[int]:
    """Indices of a maximal set of linearly independent rows (greedy)."""
    chosen: list[int] = []
    for i in range(len(m)):
        if rank([m[j] for j in chosen] + [m[i]]) > len(chosen):
            chosen.append(i)
    return chosen
