"""Exact rational linear algebra on small dense matrices (lists of lists)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def as_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    out = zeros(n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def matmul(a: Matrix, b: Matrix) -> Matrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * b[k][c] for k, x in nz), Fraction(0)) for c in range(cols)])
    assert all(len(row) == inner for row in a)
    return out


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def window(a: Matrix, i: int, j: int) -> Matrix:
    """Principal submatrix on rows/columns ``i..j`` (1-based, inclusive)."""
    return [row[i - 1:j] for row in a[i - 1:j]]


def row_echelon(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns, by exact Gauss-Jordan."""
    m = [list(map(Fraction, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((p for p in range(r, rows) if m[p][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for p in range(rows):
            if p != r and m[p][c] != 0:
                f = m[p][c]
                m[p] = [x - f * y for x, y in zip(m[p], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rational_rank(a: Sequence[Sequence]) -> int:
    """Rank over Q; no tolerance involved."""
    if not a or not a[0]:
        return 0
    return len(row_echelon(as_fraction_matrix(a))[1])


def null_space(a: Matrix) -> list[list[Fraction]]:
    """A basis of ``{x : a x = 0}``."""
    cols = len(a[0])
    red, pivots = row_echelon(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][f]
        basis.append(vec)
    return basis


def determinant(a: Matrix) -> Fraction:
    """Exact determinant by fraction-valued elimination."""
    m = [list(map(Fraction, row)) for row in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((p for p in range(c, n) if m[p][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for p in range(c + 1, n):
            if m[p][c]:
                f = m[p][c] / m[c][c]
                m[p] = [x - f * y for x, y in zip(m[p], m[c])]
    return det


def upper_triangular_inverse(a: Matrix) -> Matrix:
    """Inverse of an invertible upper-triangular matrix by back substitution."""
    n = len(a)
    if any(a[i][i] == 0 for i in range(n)):
        raise ValueError("matrix is singular")
    inv = zeros(n)
    for col in range(n):
        for i in range(col, -1, -1):
            rhs = Fraction(1) if i == col else Fraction(0)
            rhs -= sum((a[i][k] * inv[k][col] for k in range(i + 1, col + 1)), Fraction(0))
            inv[i][col] = rhs / a[i][i]
    return inv


def centralizer_dimension(nmat: Sequence[Sequence]) -> int:
    """Dimension of ``{x upper triangular : x N = N x}`` (diagonal included)."""
    n = len(nmat)
    N = as_fraction_matrix(nmat)
    unknowns = [(a, b) for a in range(n) for b in range(a, n)]
    index = {ab: k for k, ab in enumerate(unknowns)}
    equations = []
    for p in range(n):
        for q in range(n):
            # (xN - Nx)[p][q] = sum_c x[p][c] N[c][q] - sum_c N[p][c] x[c][q]
            row = [Fraction(0)] * len(unknowns)
            for c in range(p, n):
                if N[c][q]:
                    row[index[(p, c)]] += N[c][q]
            for c in range(0, q + 1):
                if N[p][c]:
                    row[index[(c, q)]] -= N[p][c]
            if any(row):
                equations.append(row)
    if not equations:
        return len(unknowns)
    return len(unknowns) - rational_rank(equations)
