"""Lower covers in the closure order on S_n^2, closures and Hasse diagrams.

Same-length covers come from four cycle moves (up, right, cross, swap);
length-dropping covers delete a cycle that is not nested in another one.
A brute-force oracle based purely on rank-matrix comparison is provided
for testing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import networkx as nx
import numpy as np

from .config import check_guard
from .involutions import (
    Involution,
    drop_cycle,
    enumerate_involutions,
    m_set,
    orbit_dimension,
    project,
)
from .rank import rank_matrix

MOVE_KINDS = ("drop", "up", "right", "cross", "swap")


@dataclass(frozen=True)
class CoverMove:
    """One cover step ``source -> target`` with its provenance.

    ``data`` holds 1-based cycle positions (``s``, and ``r`` or ``t``) in the
    canonical order of ``source``, plus the auxiliary letter ``m`` for the
    up/right moves.
    """

    kind: str
    source: Involution
    target: Involution
    data: dict = field(default_factory=dict, compare=False, hash=False)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "data": dict(self.data),
        }


def _check_position(sigma: Involution, s: int) -> tuple[int, int]:
    if not 1 <= s <= sigma.length:
        raise ValueError(f"cycle position {s} out of range for {sigma}")
    return sigma.cycles[s - 1]


def _letters_in(sigma: Involution, i: int, j: int) -> frozenset[int]:
    return project(sigma, i, j).support


def _up_letter(sigma: Involution, s: int) -> int | None:
    i_s, j_s = _check_position(sigma, s)
    used = sigma.support
    m = next((x for x in range(i_s - 1, 0, -1) if x not in used), None)
    if m is None:
        return None
    inside = _letters_in(sigma, 1, j_s)
    if all(t in inside for t in range(m + 1, i_s)):
        return m
    return None


def _right_letter(sigma: Involution, s: int) -> int | None:
    i_s, j_s = _check_position(sigma, s)
    used = sigma.support
    m = next((x for x in range(j_s + 1, sigma.n + 1) if x not in used), None)
    if m is None:
        return None
    inside = _letters_in(sigma, i_s, sigma.n)
    if all(t in inside for t in range(j_s + 1, m)):
        return m
    return None


def cover_up(sigma: Involution, s: int) -> Involution | None:
    """Move the first letter of cycle ``s`` down to the nearest admissible free letter."""
    m = _up_letter(sigma, s)
    if m is None:
        return None
    i_s, j_s = sigma.cycles[s - 1]
    return sigma.replace([(i_s, j_s)], [(m, j_s)])


def cover_right(sigma: Involution, s: int) -> Involution | None:
    """Move the second letter of cycle ``s`` up to the nearest admissible free letter."""
    m = _right_letter(sigma, s)
    if m is None:
        return None
    i_s, j_s = sigma.cycles[s - 1]
    return sigma.replace([(i_s, j_s)], [(i_s, m)])


def _cross_partners(sigma: Involution, s: int) -> list[int]:
    i_s, j_s = _check_position(sigma, s)
    out = []
    for r in range(1, s):
        i_r, j_r = sigma.cycles[r - 1]
        if j_r >= i_s:
            continue
        inside = _letters_in(sigma, i_r, j_s)
        if all(t in inside for t in range(j_r + 1, i_s)):
            out.append(r)
    return out


def _cross_target(sigma: Involution, r: int, s: int) -> Involution:
    i_r, j_r = sigma.cycles[r - 1]
    i_s, j_s = sigma.cycles[s - 1]
    return sigma.replace([(i_r, j_r), (i_s, j_s)], [(i_r, i_s), (j_r, j_s)])


def covers_cross(sigma: Involution, s: int) -> set[Involution]:
    """Uncross cycle ``s`` with an earlier cycle lying entirely to its left."""
    return {_cross_target(sigma, r, s) for r in _cross_partners(sigma, s)}


def _swap_partners(sigma: Involution, s: int) -> list[int]:
    i_s, j_s = _check_position(sigma, s)
    if i_s + 1 > j_s - 1:
        return []
    inner = m_set(project(sigma, i_s + 1, j_s - 1))
    return [sigma.cycles.index(c) + 1 for c in inner]


def _swap_target(sigma: Involution, s: int, t: int) -> Involution:
    i_s, j_s = sigma.cycles[s - 1]
    i_t, j_t = sigma.cycles[t - 1]
    return sigma.replace([(i_s, j_s), (i_t, j_t)], [(i_s, j_t), (i_t, j_s)])


def covers_swap(sigma: Involution, s: int) -> set[Involution]:
    """Interleave cycle ``s`` with each outermost cycle nested inside it."""
    return {_swap_target(sigma, s, t) for t in _swap_partners(sigma, s)}


def cover_moves(sigma: Involution) -> list[CoverMove]:
    """Every cover move out of ``sigma``, in a fixed order (drop, up, right, cross, swap)."""
    moves: list[CoverMove] = []
    for c in m_set(sigma):
        s = sigma.cycles.index(c) + 1
        moves.append(CoverMove("drop", sigma, drop_cycle(sigma, s), {"s": s}))
    k = sigma.length
    for s in range(1, k + 1):
        m = _up_letter(sigma, s)
        if m is not None:
            moves.append(CoverMove("up", sigma, cover_up(sigma, s), {"s": s, "m": m}))
    for s in range(1, k + 1):
        m = _right_letter(sigma, s)
        if m is not None:
            moves.append(CoverMove("right", sigma, cover_right(sigma, s), {"s": s, "m": m}))
    for s in range(2, k + 1):
        for r in _cross_partners(sigma, s):
            moves.append(CoverMove("cross", sigma, _cross_target(sigma, r, s), {"s": s, "r": r}))
    for s in range(1, k + 1):
        for t in _swap_partners(sigma, s):
            moves.append(CoverMove("swap", sigma, _swap_target(sigma, s, t), {"s": s, "t": t}))
    return moves


def lower_covers_same_rank(sigma: Involution) -> set[Involution]:
    return {mv.target for mv in cover_moves(sigma) if mv.kind != "drop"}


def lower_covers_lower_rank(sigma: Involution) -> set[Involution]:
    return {drop_cycle(sigma, sigma.cycles.index(c) + 1) for c in m_set(sigma)}


def lower_covers(sigma: Involution) -> set[Involution]:
    return lower_covers_same_rank(sigma) | lower_covers_lower_rank(sigma)


@lru_cache(maxsize=None)
def _rank_table(n: int) -> tuple[tuple[Involution, ...], np.ndarray]:
    invs = tuple(enumerate_involutions(n))
    table = np.stack([rank_matrix(s).ravel() for s in invs])
    table.setflags(write=False)
    return invs, table


def closure(sigma: Involution) -> set[Involution]:
    """All involutions whose rank matrix is entrywise below that of ``sigma``."""
    check_guard(sigma.n)
    invs, table = _rank_table(sigma.n)
    below = np.all(table <= rank_matrix(sigma).ravel(), axis=1)
    return {invs[k] for k in np.flatnonzero(below)}


def brute_force_lower_covers(sigma: Involution) -> set[Involution]:
    """Maximal elements strictly below ``sigma``, from rank comparisons alone."""
    check_guard(sigma.n)
    invs, table = _rank_table(sigma.n)
    top = rank_matrix(sigma).ravel()
    strictly = np.all(table <= top, axis=1) & np.any(table < top, axis=1)
    idx = np.flatnonzero(strictly)
    # a strictly larger element has a strictly larger entry sum, so scanning by
    # decreasing sum sees every maximal element above a candidate first
    idx = idx[np.argsort(-table[idx].sum(axis=1), kind="stable")]
    maximal: list[int] = []
    for k in idx:
        row = table[k]
        if not any(np.all(row <= table[m]) for m in maximal):
            maximal.append(k)
    return {invs[k] for k in maximal}


def _maximal_below(sigma: Involution, keep) -> set[Involution]:
    check_guard(sigma.n)
    invs, table = _rank_table(sigma.n)
    top = rank_matrix(sigma).ravel()
    strictly = np.all(table <= top, axis=1) & np.any(table < top, axis=1)
    idx = [k for k in np.flatnonzero(strictly) if keep(invs[k])]
    return {
        invs[k]
        for k in idx
        if not any(m != k and np.all(table[k] <= table[m]) for m in idx)
    }


def brute_force_same_rank(sigma: Involution) -> set[Involution]:
    """Maximal elements below ``sigma`` with the same number of cycles."""
    return _maximal_below(sigma, lambda x: x.length == sigma.length)


def brute_force_lower_rank(sigma: Involution) -> set[Involution]:
    """Maximal elements below ``sigma`` with fewer cycles."""
    return _maximal_below(sigma, lambda x: x.length < sigma.length)


def hasse_covers(sigma: Involution) -> set[Involution]:
    """True lower covers: the maximal members of both constructive cover sets.

    A length-dropping candidate can sit below a same-length one (``(1,2)`` in
    S_3 drops to the identity, which lies below ``(1,3)``).
    """
    cand = lower_covers(sigma)
    ranks = {c: rank_matrix(c) for c in cand}
    return {
        c
        for c in cand
        if not any(d != c and np.all(ranks[c] <= ranks[d]) for d in cand)
    }


def hasse_diagram(n: int) -> nx.DiGraph:
    """Edges ``sigma -> sigma'`` for each lower cover, built from the cover moves."""
    check_guard(n)
    g = nx.DiGraph(n=n)
    for sigma in enumerate_involutions(n):
        g.add_node(sigma, label=str(sigma), dim=orbit_dimension(sigma), length=sigma.length)
    for sigma in list(g.nodes):
        for mv in cover_moves(sigma):
            if g.has_edge(sigma, mv.target):
                g.edges[sigma, mv.target]["kinds"].add(mv.kind)
            else:
                g.add_edge(sigma, mv.target, kinds={mv.kind})
    return g


def _sorted_nodes(g: nx.DiGraph) -> list[Involution]:
    return sorted(g.nodes, key=lambda s: (s.length, s.cycles))


def _sorted_edges(g: nx.DiGraph) -> list[tuple[Involution, Involution, list[str]]]:
    edges = [
        (a, b, sorted(d["kinds"], key=MOVE_KINDS.index)) for a, b, d in g.edges(data=True)
    ]
    return sorted(edges, key=lambda e: (e[0].length, e[0].cycles, e[1].length, e[1].cycles))


def hasse_to_json(g: nx.DiGraph) -> dict:
    return {
        "n": g.graph["n"],
        "nodes": [
            {"id": str(s), "cycles": [list(c) for c in s.cycles], "dim": g.nodes[s]["dim"], "length": s.length}
            for s in _sorted_nodes(g)
        ],
        "edges": [{"source": str(a), "target": str(b), "kinds": kinds} for a, b, kinds in _sorted_edges(g)],
    }


def hasse_to_dot(g: nx.DiGraph) -> str:
    """Graphviz text with one cluster per number of cycles."""
    lines = [f'digraph "S{g.graph["n"]}^2" {{', "  rankdir=TB;", "  node [shape=box];"]
    nodes = _sorted_nodes(g)
    for length in sorted({s.length for s in nodes}):
        lines.append(f"  subgraph cluster_l{length} {{")
        lines.append(f'    label="l={length}";')
        for s in (x for x in nodes if x.length == length):
            dim = g.nodes[s]["dim"]
            lines.append(f'    "{s}" [label="{s}\\ndim={dim} l={length}", dim={dim}, l={length}];')
        lines.append("  }")
    for a, b, kinds in _sorted_edges(g):
        lines.append(f'  "{a}" -> "{b}" [label="{",".join(kinds)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def reachable(g: nx.DiGraph, sigma: Involution) -> set[Involution]:
    return nx.descendants(g, sigma) | {sigma}


def all_lower_covers(invs: Iterable[Involution]) -> dict[Involution, set[Involution]]:
    return {s: lower_covers(s) for s in invs}
