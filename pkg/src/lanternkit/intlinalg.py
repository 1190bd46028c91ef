"""Exact integer linear algebra on small dense matrices (Python ints throughout)."""

from typing import List, Sequence

import numpy as np


def _rows(m) -> List[List[int]]:
    return [[int(x) for x in row] for row in np.asarray(m, dtype=object).tolist()]


def rank(m) -> int:
    """Rank over Q by fraction-free elimination."""
    a = _rows(m)
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            if a[i][col]:
                f, g = a[r][col], a[i][col]
                a[i] = [f * x - g * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def det(m) -> int:
    """Determinant by Bareiss elimination (exact)."""
    a = _rows(m)
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_minors(m) -> List[int]:
    a = np.asarray(m, dtype=object)
    return [det(a[:k, :k]) for k in range(1, a.shape[0] + 1)]


def is_negative_definite(m) -> bool:
    # (-1)^k det of the k-th leading block is positive for every k
    return all((-1) ** k * d > 0 for k, d in enumerate(leading_minors(m), start=1))


def left_kernel(m) -> np.ndarray:
    """Saturated integer basis (as rows) of ``{u : u M = 0}``.

    Row-reduces ``[M | I]`` with unimodular integer row operations; the
    identity part of the rows whose ``M`` part vanished spans the kernel, and
    since the transform is unimodular the basis spans the whole lattice.
    """
    a = _rows(m)
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [row + [1 if i == j else 0 for j in range(nrows)] for i, row in enumerate(a)]
    r = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(r, nrows) if aug[i][col]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(aug[i][col]))
            aug[r], aug[piv] = aug[piv], aug[r]
            done = True
            for i in range(r + 1, nrows):
                if aug[i][col]:
                    f = aug[i][col] // aug[r][col]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
                    if aug[i][col]:
                        done = False
            if done:
                r += 1
                break
        if r == nrows:
            break
    basis = [row[ncols:] for row in aug[r:]]
    if not basis:
        return np.zeros((0, nrows), dtype=object)
    return np.array(basis, dtype=object)


def solve_unimodular(basis: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """Integer coordinates of ``vectors`` (rows) in ``basis`` (rows), or ``ValueError``."""
    from fractions import Fraction
    b = [[Fraction(int(x)) for x in row] for row in basis]
    k = len(b)
    out = []
    for v in vectors:
        # least squares is unnecessary: solve B^T c = v on a pivot subset of coordinates
        aug = [[b[i][j] for i in range(k)] + [Fraction(int(v[j]))] for j in range(len(v))]
        coeffs = _solve_exact(aug, k)
        if any(c.denominator != 1 for c in coeffs):
            raise ValueError("vector is not an integer combination of the basis")
        out.append([int(c) for c in coeffs])
    return np.array(out, dtype=object)


def _solve_exact(aug, k):
    rows = [r[:] for r in aug]
    piv_cols = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    if any(row[k] != 0 for row in rows[r:]):
        raise ValueError("vector is not in the span of the basis")
    coeffs = [0] * k
    for i, col in enumerate(piv_cols):
        coeffs[col] = rows[i][k]
    return coeffs


def gram(vectors: Sequence, form) -> np.ndarray:
    v = np.asarray(vectors, dtype=object)
    return v.dot(np.asarray(form, dtype=object)).dot(v.T)
