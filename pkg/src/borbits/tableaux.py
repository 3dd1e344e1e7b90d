"""Two-column standard Young tableaux and the orbital varieties they label.

Tableaux are ordered so that ``S >= T`` exactly when the involution of ``S``
lies below that of ``T`` in the closure order; larger tableaux label smaller
orbital varieties, and a single column labels the zero orbit.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterator

import numpy as np

from .involutions import Involution, enumerate_involutions
from .rank import conjugate_partition, rank_matrix


@dataclass(frozen=True, order=True)
class TwoColumnTableau:
    col1: tuple[int, ...]
    col2: tuple[int, ...] = ()

    def __post_init__(self):
        c1, c2 = tuple(self.col1), tuple(self.col2)
        object.__setattr__(self, "col1", c1)
        object.__setattr__(self, "col2", c2)
        n = len(c1) + len(c2)
        if sorted(c1 + c2) != list(range(1, n + 1)):
            raise ValueError(f"entries {c1}+{c2} are not exactly 1..{n}")
        if list(c1) != sorted(c1) or list(c2) != sorted(c2):
            raise ValueError("columns must increase downwards")
        if len(c2) > len(c1):
            raise ValueError("second column is longer than the first")
        for a, b in zip(c1, c2):
            if a >= b:
                raise ValueError(f"row ({a},{b}) does not increase")

    @property
    def n(self) -> int:
        return len(self.col1) + len(self.col2)

    @property
    def shape(self) -> tuple[int, ...]:
        """Column lengths, zero parts dropped."""
        return tuple(p for p in (len(self.col1), len(self.col2)) if p)

    @classmethod
    def from_json(cls, data: dict) -> "TwoColumnTableau":
        return cls(tuple(data["col1"]), tuple(data.get("col2", ())))

    @classmethod
    def parse(cls, text: str) -> "TwoColumnTableau":
        """Read JSON or ``"1,2,3,6/4,5,7,8"`` (first column / second column)."""
        import json

        text = text.strip()
        if text.startswith("{"):
            return cls.from_json(json.loads(text))
        left, _, right = text.partition("/")
        as_ints = lambda s: tuple(int(x) for x in s.replace(" ", "").split(",") if x)  # noqa: E731
        try:
            return cls(as_ints(left), as_ints(right))
        except ValueError as exc:
            raise ValueError(f"cannot parse tableau from {text!r}: {exc}") from exc

    def to_json(self) -> dict:
        return {"col1": list(self.col1), "col2": list(self.col2)}

    def __str__(self) -> str:
        rows = []
        w = len(str(self.n))
        for k, a in enumerate(self.col1):
            b = f" {self.col2[k]:>{w}}" if k < len(self.col2) else ""
            rows.append(f"{a:>{w}}{b}")
        return "\n".join(rows)


def _ballot_sequences(n: int) -> Iterator[tuple[int, ...]]:
    # col2 sets such that every prefix of 1..m has at least as many col1 letters
    def rec(m: int, c2: tuple[int, ...], ones: int):
        if m > n:
            yield c2
            return
        yield from rec(m + 1, c2, ones + 1)
        if len(c2) < ones:
            yield from rec(m + 1, c2 + (m,), ones)

    yield from rec(1, (), 0)


def enumerate_tableaux(n: int) -> list[TwoColumnTableau]:
    """All two-column standard tableaux with entries 1..n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    for c2 in _ballot_sequences(n):
        c1 = tuple(x for x in range(1, n + 1) if x not in c2)
        out.append(TwoColumnTableau(c1, c2))
    return sorted(out, key=lambda t: (len(t.col2), t.col2))


def hook_length_count(column_lengths: tuple[int, ...]) -> int:
    """Number of standard tableaux of the given shape by the hook length formula."""
    rows = conjugate_partition(column_lengths)
    cols = tuple(p for p in column_lengths if p)
    n = sum(rows)
    hooks = prod(
        (rows[r] - c - 1) + (cols[c] - r - 1) + 1 for r in range(len(rows)) for c in range(rows[r])
    )
    return factorial(n) // hooks


def two_column_count(n: int, k: int) -> int:
    """Tableaux with column lengths ``(n-k, k)``: a ballot number."""
    return comb(n, k) - (comb(n, k - 1) if k else 0)


def _cycles_by_second(T: TwoColumnTableau) -> list[tuple[int, int]]:
    used: set[int] = set()
    cycles = []
    for j in T.col2:
        i = max(d for d in T.col1 if d < j and d not in used)
        used.add(i)
        cycles.append((i, j))
    return cycles


def involution_of_tableau(T: TwoColumnTableau) -> Involution:
    """Pair each second-column entry with the largest unused smaller first-column entry."""
    return Involution(T.n, tuple(_cycles_by_second(T)))


def tableau_move(T: TwoColumnTableau, s: int) -> TwoColumnTableau:
    """Move the ``s``-th entry of the second column into the first."""
    if not 1 <= s <= len(T.col2):
        raise ValueError(f"row {s} has no second-column entry in a tableau with {len(T.col2)} rows there")
    e = T.col2[s - 1]
    return TwoColumnTableau(tuple(sorted(T.col1 + (e,))), T.col2[: s - 1] + T.col2[s:])


def tableau_covers(T: TwoColumnTableau) -> set[TwoColumnTableau]:
    """Tableaux directly above ``T``.

    Moving the ``s``-th second-column entry qualifies iff every later cycle
    (in second-entry order) starts after that entry.
    """
    cyc = _cycles_by_second(T)
    sigma = involution_of_tableau(T)
    out = set()
    for s, (_, j) in enumerate(cyc, start=1):
        ok = all(cyc[p][0] > j for p in range(s, len(cyc)))
        moved = tableau_move(T, s)
        dropped = sigma.replace([cyc[s - 1]], [])
        assert ok == (involution_of_tableau(moved) == dropped), (T, s)
        if ok:
            out.add(moved)
    return out


def _rank(T: TwoColumnTableau) -> np.ndarray:
    return rank_matrix(involution_of_tableau(T))


def tableau_leq(S: TwoColumnTableau, T: TwoColumnTableau) -> bool:
    """``S <= T``: the involution of ``T`` is below that of ``S``."""
    if S.n != T.n:
        raise ValueError(f"size mismatch: {S.n} vs {T.n}")
    return bool(np.all(_rank(T) <= _rank(S)))


def brute_force_tableau_covers(T: TwoColumnTableau) -> set[TwoColumnTableau]:
    """Minimal tableaux strictly above ``T``, by pairwise comparison."""
    above = [S for S in enumerate_tableaux(T.n) if S != T and tableau_leq(T, S)]
    return {S for S in above if not any(U != S and tableau_leq(U, S) for U in above)}


def orbital_variety_orbits(T: TwoColumnTableau) -> set[Involution]:
    """The B-orbits making up the orbital variety of ``T``: same length, below ``sigma_T``."""
    sigma = involution_of_tableau(T)
    top = rank_matrix(sigma)
    return {
        s
        for s in enumerate_involutions(T.n)
        if s.length == sigma.length and np.all(rank_matrix(s) <= top)
    }


def orbital_closure(T: TwoColumnTableau) -> set[TwoColumnTableau]:
    """Every two-column tableau ``S >= T``."""
    return {S for S in enumerate_tableaux(T.n) if tableau_leq(T, S)}
