"""Generators of rank-condition ideals in the coordinates x(i,j), i > j.

A point ``u`` of the strictly upper-triangular matrices is paired with the
generic strictly lower-triangular matrix ``X`` via ``x(i,j) <- u[j][i]``, so
minors of windows of ``X^p`` evaluate to minors of windows of ``(u^p)^T``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .involutions import Involution
from .polynomials import SymPolynomial, determinant, serialize
from .rank import ShapeMatrix, entry, rank_matrix

MODES = ("full", "pruned")

Window = tuple[int, int]


@dataclass
class GeneratorSet:
    n: int
    source: object
    mode: str
    quadratic: list[SymPolynomial] = field(default_factory=list)
    # (window, power, minor size, generator)
    minors: list[tuple[Window, int, int, SymPolynomial]] = field(default_factory=list)

    def all(self) -> list[SymPolynomial]:
        return self.quadratic + [g for *_, g in self.minors]

    def linear_variables(self) -> set[tuple[int, int]]:
        out = set()
        for g in self.all():
            if g.degree() == 1 and len(g.terms) == 1:
                out |= g.variables()
        return out

    def to_json(self) -> dict:
        src = self.source.to_json() if isinstance(self.source, Involution) else [
            [list(p) for p in row] for row in self.source
        ]
        groups: dict[tuple, list[str]] = {}
        for (i, j), p, size, g in self.minors:
            groups.setdefault((i, j, p, size), []).append(serialize(g))
        return {
            "n": self.n,
            "mode": self.mode,
            "source": src,
            "quadratic": [serialize(g) for g in self.quadratic],
            "minors": [
                {"window": [i, j], "power": p, "size": size, "generators": gens}
                for (i, j, p, size), gens in groups.items()
            ],
        }


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown pruning mode {mode!r}; expected one of {MODES}")


@lru_cache(maxsize=None)
def generic_power(n: int, p: int) -> tuple[tuple[SymPolynomial, ...], ...]:
    """``X^p`` for the generic strictly lower-triangular ``X``, 1-based padded rows."""
    if p == 1:
        return tuple(
            tuple(SymPolynomial.var(a, b) if a > b else SymPolynomial() for b in range(1, n + 1))
            for a in range(1, n + 1)
        )
    prev = generic_power(n, p - 1)
    base = generic_power(n, 1)
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            acc = SymPolynomial()
            for c in range(b + 1, a):
                if prev[a][c] and base[c][b]:
                    acc = acc + prev[a][c] * base[c][b]
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def window_minors(n: int, i: int, j: int, p: int, size: int) -> list[SymPolynomial]:
    """All nonzero ``size``-minors of rows/columns ``i..j`` of ``X^p``, normalized."""
    if size < 1 or size > j - i + 1:
        return []
    X = generic_power(n, p)
    idx = range(i - 1, j)
    out = []
    for rows in combinations(idx, size):
        for cols in combinations(idx, size):
            # every row index at most every column index: the block is zero
            if rows[-1] <= cols[0]:
                continue
            d = determinant([[X[r][c] for c in cols] for r in rows])
            if d:
                out.append(d.normalize())
    return out


def i2_generators(n: int) -> list[SymPolynomial]:
    """Entries of ``X^2``: the conditions ``u^2 = 0``."""
    X2 = generic_power(n, 2) if n >= 1 else ()
    out = []
    for j in range(1, n + 1):
        for i in range(j + 2, n + 1):
            out.append(X2[i - 1][j - 1].normalize())
    return out


class _Collector:
    def __init__(self, gs: GeneratorSet):
        self.gs = gs
        self.seen = {g for g in gs.quadratic}

    def add(self, window: Window, power: int, size: int, polys: Sequence[SymPolynomial]) -> None:
        for g in polys:
            if g not in self.seen:
                self.seen.add(g)
                self.gs.minors.append((window, power, size, g))


def ideal_generators(sigma: Involution, mode: str = "pruned") -> GeneratorSet:
    """``u^2 = 0`` together with ``rank(window) <= R_sigma`` on each selected window.

    ``full`` uses every window ``i < j``; ``pruned`` keeps only windows whose
    rank equals that of the window shrunk by one on both ends (out-of-range
    reads count as 0).
    """
    _check_mode(mode)
    n = sigma.n
    R = rank_matrix(sigma)
    gs = GeneratorSet(n, sigma, mode, quadratic=i2_generators(n))
    col = _Collector(gs)
    for width in range(1, n):
        for i in range(1, n - width + 1):
            j = i + width
            r = entry(R, i, j)
            if mode == "pruned" and r != entry(R, i + 1, j - 1):
                continue
            col.add((i, j), 1, r + 1, window_minors(n, i, j, 1, r + 1))
    return gs


def _first_difference(big: Sequence[int], small: Sequence[int]) -> int:
    """1-based index of the part incremented to pass from ``small`` to ``big``."""
    for k, a in enumerate(big, start=1):
        b = small[k - 1] if k <= len(small) else 0
        if a != b:
            return k
    raise ValueError(f"{tuple(big)} does not come from {tuple(small)} by incrementing a part")


def _shape(D: ShapeMatrix, i: int, j: int) -> tuple[int, ...]:
    return tuple(D[i - 1][j - 1]) if i < j else (1,)


def shape_ideal_generators(D: ShapeMatrix, mode: str = "pruned") -> GeneratorSet:
    """Power rank conditions ``rank(window^p) <= sum of column lengths past p``.

    In ``pruned`` mode a window is skipped entirely when its partition is a
    neighbour's partition with a part 1 appended, and otherwise powers below
    the incremented part index are skipped, since both are implied by smaller
    windows.
    """
    _check_mode(mode)
    n = len(D)
    gs = GeneratorSet(n, D, mode)
    col = _Collector(gs)
    for width in range(1, n):
        for i in range(1, n - width + 1):
            j = i + width
            lam = _shape(D, i, j)
            if sum(lam) != width + 1:
                raise ValueError(f"D[{i}][{j}]={lam} is not a partition of {width + 1}")
            start = 1
            if mode == "pruned":
                neighbours = (_shape(D, i, j - 1), _shape(D, i + 1, j))
                ls = [_first_difference(lam, nb) for nb in neighbours]
                if any(l == len(nb) + 1 for l, nb in zip(ls, neighbours)):
                    continue
                start = max(ls)
            for p in range(start, len(lam) + 1):
                size = 1 + sum(lam[p:])
                col.add((i, j), p, size, window_minors(n, i, j, p, size))
    return gs
