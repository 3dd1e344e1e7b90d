"""Rank matrices, shape matrices and the entrywise closure order.

Rank matrices are ``numpy`` integer arrays indexed ``R[i-1, j-1]`` for the
1-based window ``[i, j]``.  Entries with ``i >= j`` are zero, and any read
outside ``1..n`` (e.g. ``R[i+1, j-1]`` on the first superdiagonal) counts as 0.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from .involutions import Involution
from .linalg import as_fraction_matrix, matmul, rational_rank, window

Partition = tuple[int, ...]
ShapeMatrix = list[list[Partition]]


class OrderRelation(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def rank_matrix(sigma: Involution) -> np.ndarray:
    """``R[i-1, j-1]`` = number of cycles of ``sigma`` inside ``[i, j]``."""
    n = sigma.n
    R = np.zeros((n, n), dtype=np.int64)
    for a, b in sigma.cycles:
        R[:a, b - 1:] += 1
    # windows with i >= j hold no cycle, but the slice above may touch them
    R[np.tril_indices(n)] = 0
    return R


def entry(R: np.ndarray, i: int, j: int) -> int:
    """1-based read with the zero boundary convention."""
    n = R.shape[0]
    if i < 1 or j < 1 or i > n or j > n or i >= j:
        return 0
    return int(R[i - 1, j - 1])


def _check_upper_nilpotent(u: Sequence[Sequence]) -> list[list[Fraction]]:
    mat = as_fraction_matrix(u)
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix must be square")
    if any(mat[r][c] != 0 for r in range(n) for c in range(r + 1)):
        raise ValueError("matrix must be strictly upper triangular")
    return mat


def rank_matrix_of(u: Sequence[Sequence]) -> np.ndarray:
    """Exact ranks of every window ``pi_{i,j}(u)``."""
    mat = _check_upper_nilpotent(u)
    n = len(mat)
    R = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            R[i - 1, j - 1] = rational_rank(window(mat, i, j))
    return R


def conjugate_partition(lam: Sequence[int]) -> Partition:
    """Swap rows and columns of the Young diagram."""
    lam = [p for p in lam if p > 0]
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > t) for t in range(lam[0]))


def _partition_from_power_ranks(ranks: list[int]) -> Partition:
    # ranks[p] = rank of the p-th power, ranks[0] = size; column lengths are the drops
    parts = [ranks[p - 1] - ranks[p] for p in range(1, len(ranks))]
    return tuple(p for p in parts if p > 0)


def shape_matrix_of(u: Sequence[Sequence]) -> ShapeMatrix:
    """Jordan column partitions of every window of a strictly upper-triangular ``u``.

    ``D[i-1][j-1]`` is a partition of ``j - i + 1`` for ``i <= j`` and ``()``
    below the diagonal.
    """
    mat = _check_upper_nilpotent(u)
    n = len(mat)
    powers = [mat]
    while any(x != 0 for row in powers[-1] for x in row):
        powers.append(matmul(powers[-1], mat))
    D: ShapeMatrix = [[() for _ in range(n)] for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            size = j - i + 1
            ranks = [size]
            for pw in powers:
                r = rational_rank(window(pw, i, j)) if size > 1 else 0
                ranks.append(r)
                if r == 0:
                    break
            D[i - 1][j - 1] = _partition_from_power_ranks(ranks)
    return D


def shape_matrix_of_involution(sigma: Involution) -> ShapeMatrix:
    """Square-zero shortcut: ``D[i][j] = (j+1-i-R, R)``."""
    R = rank_matrix(sigma)
    n = sigma.n
    D: ShapeMatrix = [[() for _ in range(n)] for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            r = entry(R, i, j)
            D[i - 1][j - 1] = tuple(p for p in (j + 1 - i - r, r) if p > 0)
    return D


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Partial-sum dominance ``lam <= mu`` over the common length."""
    s_l = s_m = 0
    for a, b in zip(lam, mu):
        s_l += a
        s_m += b
        if s_l > s_m:
            return False
    return True


def shape_dominance_leq(a: ShapeMatrix, b: ShapeMatrix) -> bool:
    """True iff every window orbit of ``a`` lies in the closure of that of ``b``.

    Windows are compared by partial-sum dominance of their Jordan block sizes
    (the conjugates of the stored column partitions), so that for square-zero
    matrices this agrees with the entrywise order on rank matrices.
    """
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if not dominance_leq(conjugate_partition(a[i][j]), conjugate_partition(b[i][j])):
                return False
    return True


def _corner(R: np.ndarray, i: int, j: int) -> bool:
    r = entry(R, i, j)
    return (
        r == entry(R, i + 1, j) + 1
        and r == entry(R, i, j - 1) + 1
        and r == entry(R, i + 1, j - 1) + 1
    )


def is_valid_rank_matrix(R: Sequence[Sequence[int]]) -> bool:
    """Check the three structural properties characterising rank matrices of involutions."""
    R = np.asarray(R)
    if R.ndim != 2 or R.shape[0] != R.shape[1] or R.shape[0] == 0:
        return False
    if not np.issubdtype(R.dtype, np.integer):
        if not np.all(np.equal(np.mod(R, 1), 0)):
            return False
        R = R.astype(np.int64)
    n = R.shape[0]
    if np.any(R < 0) or np.any(R[np.tril_indices(n)] != 0):
        return False
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            r = entry(R, i, j)
            for nb in (entry(R, i + 1, j), entry(R, i, j - 1)):
                if not nb <= r <= nb + 1:
                    return False
    e = lambda a, b: entry(R, a, b)  # noqa: E731
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not _corner(R, i, j):
                continue
            for k in range(1, n + 1):
                if e(i, k) != e(i + 1, k) + (1 if k >= j else 0):
                    return False
                if e(k, j) != e(k, j - 1) + (1 if k <= i else 0):
                    return False
                if e(j, k) != e(j + 1, k) or e(k, i) != e(k, i - 1):
                    return False
    return True


def involution_of_rank_matrix(R: Sequence[Sequence[int]]) -> Involution:
    """Recover the unique involution with rank matrix ``R``."""
    R = np.asarray(R, dtype=np.int64)
    if not is_valid_rank_matrix(R):
        raise ValueError("not the rank matrix of an involution")
    n = R.shape[0]
    cycles = tuple(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if _corner(R, i, j)
    )
    return Involution(n, cycles)


def compare(a: np.ndarray, b: np.ndarray) -> OrderRelation:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"size mismatch: {a.shape} vs {b.shape}")
    le = bool(np.all(a <= b))
    ge = bool(np.all(a >= b))
    if le and ge:
        return OrderRelation.EQUAL
    if le:
        return OrderRelation.LESS
    if ge:
        return OrderRelation.GREATER
    return OrderRelation.INCOMPARABLE


def leq(a: Involution, b: Involution) -> bool:
    """``a <= b`` in the closure order."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    return bool(np.all(rank_matrix(a) <= rank_matrix(b)))


def classify_local(R: np.ndarray, i: int, j: int) -> str:
    """Which of the five local corner patterns occurs at ``(i, j)``.

    Returns one of ``"i"``, ``"ii"``, ``"iii"``, ``"iv"``, ``"v"``.
    """
    n = np.asarray(R).shape[0]
    if not 1 <= i < j <= n:
        raise ValueError(f"position ({i},{j}) is not above the diagonal of a {n}x{n} matrix")
    r = entry(R, i, j)
    inner = entry(R, i + 1, j - 1)
    below = entry(R, i + 1, j)
    left = entry(R, i, j - 1)
    if r == inner and below == r and left == r:
        return "i"
    if r == inner + 2 and below == inner + 1 and left == inner + 1:
        return "ii"
    if r == inner + 1:
        if below == inner and left == inner:
            return "iii"
        # row i is empty: the new one sits in column j below row i
        if left == inner and below == r:
            return "iv"
        # column j is empty: the new one sits in row i left of column j
        if below == inner and left == r:
            return "v"
    raise ValueError(f"no local pattern at ({i},{j}); matrix is not a rank matrix")


def power_rank_counterexample() -> tuple[list[list[int]], list[list[int]]]:
    """Two 6x6 nilpotent matrices ``(M, N)`` in the same nilpotent orbit.

    Their B-orbits have equal dimension, so neither lies in the closure of the
    other, yet every window shape of ``N`` is dominated by that of ``M``: shape
    matrices do not decide B-orbit closure once ``u^2 != 0``.
    """
    M = [[0] * 6 for _ in range(6)]
    for r, c in ((1, 2), (3, 4), (4, 5)):
        M[r - 1][c - 1] = 1
    N = [[0] * 6 for _ in range(6)]
    for r, c in ((1, 2), (2, 5), (2, 6), (3, 6), (4, 5)):
        N[r - 1][c - 1] = 1
    return M, N
