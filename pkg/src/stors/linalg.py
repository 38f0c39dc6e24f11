"""Exact linear algebra over the rationals for small dense matrices.

Matrices are lists of rows. Entries may be ints or Fractions; results are
always Fractions so nothing is lost to floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def as_matrix(rows: Sequence[Sequence[int | Fraction]], ncols: int | None = None) -> Matrix:
    m = [[Fraction(x) for x in row] for row in rows]
    if ncols is not None:
        for row in m:
            if len(row) != ncols:
                raise ValueError(f"row of length {len(row)}, expected {ncols}")
    elif m:
        width = len(m[0])
        if any(len(row) != width for row in m):
            raise ValueError("ragged matrix")
    return m


def zeros(nrows: int, ncols: int) -> Matrix:
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def rref(rows: Sequence[Sequence[int | Fraction]], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = as_matrix(rows, ncols)
    if not m:
        return m, []
    width = len(m[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[int | Fraction]], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[int | Fraction]], ncols: int) -> Matrix:
    """Basis (as a list of vectors) of {x : rows @ x = 0}."""
    if not rows:
        return identity(ncols)
    m, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][f]
        basis.append(v)
    return basis


def left_nullspace(cols_matrix: Matrix, nrows: int) -> Matrix:
    """Basis of {y : y @ M = 0} for an nrows x k matrix M."""
    if not cols_matrix or not cols_matrix[0]:
        return identity(nrows)
    return nullspace(transpose(cols_matrix), nrows)


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None, ncols: int | None = None) -> Matrix:
    """Product a @ b; `inner` and `ncols` disambiguate empty shapes."""
    k = inner if inner is not None else (len(a[0]) if a else len(b))
    n = ncols if ncols is not None else (len(b[0]) if b else 0)
    out = zeros(len(a), n)
    for i, row in enumerate(a):
        for t in range(k):
            x = row[t]
            if x == 0:
                continue
            bt = b[t]
            for j in range(n):
                if bt[j] != 0:
                    out[i][j] += x * bt[j]
    return out


def solve(a: Matrix, b: Sequence[int | Fraction], ncols: int) -> list[Fraction] | None:
    """One solution x of a @ x = b, or None if inconsistent."""
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    m, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = m[i][ncols]
    return x


def right_inverse(q: Matrix, ncols: int) -> Matrix:
    """Matrix s with q @ s = identity, for q of full row rank."""
    n = len(q)
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        x = solve(q, e, ncols)
        if x is None:
            raise ValueError("matrix does not have full row rank")
        cols.append(x)
    return transpose(cols) if cols else zeros(ncols, 0)
