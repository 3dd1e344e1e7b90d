"""Involutions of S_n as labels of B-orbits in the square-zero variety.

An involution is stored as its ambient size ``n`` together with its disjoint
2-cycles ``(i, j)``, ``i < j``, sorted by first entry.  All letters are
1-based, as in the printed notation ``(1,7)(2,3)(4,6)``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

Cycle = tuple[int, int]

_CYCLE_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


@dataclass(frozen=True, order=True)
class Involution:
    """An involution of ``{1..n}`` written as disjoint 2-cycles."""

    n: int
    cycles: tuple[Cycle, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"ambient size must be positive, got {self.n}")
        canon = tuple(sorted((min(a, b), max(a, b)) for a, b in self.cycles))
        seen: set[int] = set()
        for i, j in canon:
            if i == j:
                raise ValueError(f"cycle ({i},{j}) is not a transposition")
            if i < 1 or j > self.n:
                raise ValueError(f"cycle ({i},{j}) lies outside 1..{self.n}")
            if i in seen or j in seen:
                raise ValueError(f"cycles of {canon} are not disjoint")
            seen.update((i, j))
        object.__setattr__(self, "cycles", canon)

    @classmethod
    def identity(cls, n: int) -> "Involution":
        return cls(n, ())

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Involution":
        """Read ``"(1,7)(2,3)(4,6)"``, ``"id"`` or the JSON form.

        ``n`` defaults to the largest letter used (1 for the identity).
        """
        text = text.strip()
        if text.startswith("{"):
            data = json.loads(text)
            if n is not None and n != data["n"]:
                raise ValueError(f"JSON says n={data['n']} but n={n} was given")
            return cls.from_json(data)
        if text in ("", "id", "()", "e"):
            return cls(n or 1, ())
        cycles = [(int(a), int(b)) for a, b in _CYCLE_RE.findall(text)]
        if _CYCLE_RE.sub("", text).strip():
            raise ValueError(f"cannot parse involution from {text!r}")
        if n is None:
            n = max(max(c) for c in cycles)
        return cls(n, tuple(cycles))

    @classmethod
    def from_json(cls, data: dict) -> "Involution":
        return cls(int(data["n"]), tuple((int(a), int(b)) for a, b in data["cycles"]))

    def to_json(self) -> dict:
        return {"n": self.n, "cycles": [list(c) for c in self.cycles]}

    def __str__(self) -> str:
        if not self.cycles:
            return "id"
        return "".join(f"({i},{j})" for i, j in self.cycles)

    def __len__(self) -> int:
        return len(self.cycles)

    @property
    def length(self) -> int:
        """Number of 2-cycles, ``l(sigma)``."""
        return len(self.cycles)

    @property
    def firsts(self) -> frozenset[int]:
        """The set ``I(sigma)`` of first entries."""
        return frozenset(i for i, _ in self.cycles)

    @property
    def seconds(self) -> frozenset[int]:
        """The set ``J(sigma)`` of second entries."""
        return frozenset(j for _, j in self.cycles)

    @property
    def support(self) -> frozenset[int]:
        return self.firsts | self.seconds

    def replace(self, old: Iterable[Cycle], new: Iterable[Cycle]) -> "Involution":
        """Swap the cycles in ``old`` for those in ``new``."""
        old = set(old)
        missing = old.difference(self.cycles)
        if missing:
            raise ValueError(f"{sorted(missing)} are not cycles of {self}")
        kept = [c for c in self.cycles if c not in old]
        return Involution(self.n, tuple(kept) + tuple(new))

    def as_permutation(self) -> tuple[int, ...]:
        """One-line notation ``(sigma(1), ..., sigma(n))``."""
        image = list(range(1, self.n + 1))
        for i, j in self.cycles:
            image[i - 1], image[j - 1] = j, i
        return tuple(image)


def enumerate_involutions(n: int) -> list[Involution]:
    """Every involution of S_n, identity first, then lexicographic on cycle lists."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    found = [Involution(n, cycles) for cycles in _matchings(tuple(range(1, n + 1)))]
    return sorted(found, key=lambda s: s.cycles)


def _matchings(letters: tuple[int, ...]) -> Iterator[tuple[Cycle, ...]]:
    # partial matchings; the smallest letter is either fixed or paired
    if not letters:
        yield ()
        return
    first, rest = letters[0], letters[1:]
    yield from _matchings(rest)
    for pos, partner in enumerate(rest):
        remaining = rest[:pos] + rest[pos + 1:]
        for tail in _matchings(remaining):
            yield ((first, partner),) + tail


def involution_count(n: int) -> int:
    """Number of involutions of S_n, by a(n) = a(n-1) + (n-1) a(n-2)."""
    a, b = 1, 1
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b


def matrix_of(sigma: Involution) -> list[list[Fraction]]:
    """The 0/1 matrix ``N_sigma`` with ones exactly at the cycle positions."""
    n = sigma.n
    mat = [[Fraction(0)] * n for _ in range(n)]
    for i, j in sigma.cycles:
        mat[i - 1][j - 1] = Fraction(1)
    return mat


def project(sigma: Involution, i: int, j: int) -> Involution:
    """Keep the cycles lying inside the window ``[i, j]``; ambient size unchanged."""
    if not 1 <= i <= j <= sigma.n:
        raise ValueError(f"window [{i},{j}] is not inside 1..{sigma.n}")
    return Involution(sigma.n, tuple(c for c in sigma.cycles if i <= c[0] and c[1] <= j))


def drop_cycle(sigma: Involution, s: int) -> Involution:
    """Remove the ``s``-th cycle (1-based, canonical order)."""
    if not 1 <= s <= len(sigma.cycles):
        raise ValueError(f"cycle position {s} out of range for {sigma}")
    return Involution(sigma.n, sigma.cycles[: s - 1] + sigma.cycles[s:])


def m_set(sigma: Involution) -> list[Cycle]:
    """Cycles not nested inside another cycle of ``sigma``.

    ``(i, j)`` qualifies iff no other cycle ``(a, b)`` has ``a < i`` and ``b > j``.
    Returned in canonical order.
    """
    return [
        (i, j)
        for i, j in sigma.cycles
        if not any(a < i and b > j for a, b in sigma.cycles)
    ]


def m_positions(sigma: Involution) -> list[int]:
    """Positions ``s`` (1-based) whose second entry beats every earlier one."""
    out, best = [], 0
    for s, (_, j) in enumerate(sigma.cycles, start=1):
        if j > best:
            out.append(s)
            best = j
    return out


def r_values(sigma: Involution) -> list[int]:
    """The statistics ``r_2, ..., r_k`` entering the dimension formula."""
    cyc = sigma.cycles
    seconds = [j for _, j in cyc]
    out = []
    for s in range(1, len(cyc)):
        i_s, j_s = cyc[s]
        earlier = sum(1 for p in range(s) if seconds[p] < j_s)
        below = sum(1 for jp in seconds if jp < i_s)
        out.append(earlier + below)
    return out


def orbit_dimension(sigma: Involution) -> int:
    """Dimension of the B-orbit of ``N_sigma`` (closed formula)."""
    k = sigma.length
    return k * sigma.n + sum(i - j for i, j in sigma.cycles) - sum(r_values(sigma))


def orbit_shape(sigma: Involution) -> tuple[int, ...]:
    """Column-length partition ``(n-k, k)`` of the G-orbit; zero parts dropped."""
    k = sigma.length
    return tuple(p for p in (sigma.n - k, k) if p > 0)
