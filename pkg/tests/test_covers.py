import json
from pathlib import Path

import numpy as np
import pytest

from borbits.config import ENV_VAR, GuardError
from borbits.covers import (
    brute_force_lower_covers,
    closure,
    cover_moves,
    cover_right,
    cover_up,
    covers_cross,
    covers_swap,
    hasse_covers,
    hasse_diagram,
    hasse_to_dot,
    hasse_to_json,
    lower_covers,
    lower_covers_lower_rank,
    reachable,
)
from borbits.involutions import Involution, enumerate_involutions, orbit_dimension
from borbits.rank import leq, rank_matrix
from reference_data import CROSS_EXAMPLES, DROP_EXAMPLE, RIGHT_EXAMPLES, SWAP_EXAMPLES, UP_EXAMPLES

GOLDEN = Path(__file__).parent / "data" / "hasse_n5.json"


def inv(text, n=None):
    return Involution.parse(text, n)


def position(sigma, cycle):
    return sigma.cycles.index(cycle) + 1


@pytest.mark.parametrize("sigma, n, cycle, expected", UP_EXAMPLES)
def test_up_examples(sigma, n, cycle, expected):
    s = inv(sigma, n)
    got = cover_up(s, position(s, cycle))
    assert got == (inv(expected, n) if expected else None)


@pytest.mark.parametrize("sigma, n, cycle, expected", RIGHT_EXAMPLES)
def test_right_examples(sigma, n, cycle, expected):
    s = inv(sigma, n)
    got = cover_right(s, position(s, cycle))
    assert got == (inv(expected, n) if expected else None)


@pytest.mark.parametrize("sigma, n, cycle, expected", CROSS_EXAMPLES)
def test_cross_examples(sigma, n, cycle, expected):
    s = inv(sigma, n)
    assert covers_cross(s, position(s, cycle)) == {inv(e, n) for e in expected}


@pytest.mark.parametrize("sigma, n, cycle, expected", SWAP_EXAMPLES)
def test_swap_examples(sigma, n, cycle, expected):
    s = inv(sigma, n)
    assert covers_swap(s, position(s, cycle)) == {inv(e, n) for e in expected}


def test_drop_example():
    sigma, n, expected = DROP_EXAMPLE
    assert lower_covers_lower_rank(inv(sigma, n)) == {inv(e, n) for e in expected}


def test_position_out_of_range():
    with pytest.raises(ValueError):
        cover_up(inv("(1,2)", 3), 2)


def _delta_cells(move):
    """Window cells whose rank drops by exactly one under the move."""
    sigma, d = move.source, move.data
    i_s, j_s = sigma.cycles[d["s"] - 1]
    n = sigma.n
    cells = set()
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            if move.kind == "drop":
                hit = p <= i_s and q >= j_s
            elif move.kind == "up":
                hit = d["m"] < p <= i_s and q >= j_s
            elif move.kind == "right":
                hit = p <= i_s and j_s <= q < d["m"]
            elif move.kind == "cross":
                i_r, j_r = sigma.cycles[d["r"] - 1]
                hit = (p <= i_r and j_r <= q < i_s) or (j_r < p <= i_s and q >= j_s)
            else:
                i_t, j_t = sigma.cycles[d["t"] - 1]
                hit = i_s < p <= i_t and j_t <= q < j_s
            if hit:
                cells.add((p, q))
    return cells


@pytest.mark.parametrize("n", range(2, 8))
def test_rank_drops_exactly(n):
    for s in enumerate_involutions(n):
        top = rank_matrix(s)
        for mv in cover_moves(s):
            diff = top - rank_matrix(mv.target)
            assert diff.min() == 0 and diff.max() == 1, mv
            got = {(p + 1, q + 1) for p, q in zip(*np.nonzero(diff))}
            assert got == _delta_cells(mv), mv


@pytest.mark.parametrize("n", range(2, 8))
def test_moves_stay_below(n):
    for s in enumerate_involutions(n):
        for mv in cover_moves(s):
            assert mv.target != s and leq(mv.target, s)
            same = mv.kind != "drop"
            assert (mv.target.length == s.length) == same
            assert orbit_dimension(mv.target) < orbit_dimension(s)


@pytest.mark.parametrize("n", range(1, 8))
def test_hasse_covers_match_brute_force(n):
    for s in enumerate_involutions(n):
        assert hasse_covers(s) == brute_force_lower_covers(s)


def test_length_dropping_candidate_not_a_cover():
    s = inv("(1,2)", 3)
    assert Involution.identity(3) in lower_covers(s)
    assert brute_force_lower_covers(s) == {inv("(1,3)", 3)}


def test_closure_example():
    # (1,3)(2,4) also lies below (1,4)(2,3): its rank matrix is entrywise smaller
    expected = {"(1,4)(2,3)", "(1,3)(2,4)", "(1,3)", "(1,4)", "(2,3)", "(2,4)", "id"}
    assert closure(inv("(1,4)(2,3)", 4)) == {inv(e, 4) for e in expected}


@pytest.mark.parametrize("n", range(1, 7))
def test_closure_properties(n):
    invs = enumerate_involutions(n)
    for s in invs:
        members = closure(s)
        assert s in members and Involution.identity(n) in members
        for t in members:
            assert closure(t) <= members
        dims = sorted((orbit_dimension(t) for t in members), reverse=True)
        assert dims[0] == orbit_dimension(s)
        assert len(dims) == 1 or dims[1] < dims[0]


@pytest.mark.parametrize("n", range(1, 7))
def test_move_graph_reaches_closure(n):
    g = hasse_diagram(n)
    for s in enumerate_involutions(n):
        assert reachable(g, s) == closure(s)


@pytest.fixture(scope="module")
def golden():
    return json.loads(GOLDEN.read_text())


@pytest.fixture(scope="module")
def graph():
    return hasse_diagram(5)


class TestGolden:
    def test_nodes(self, golden, graph):
        data = hasse_to_json(graph)
        assert [(x["id"], x["dim"], x["length"]) for x in data["nodes"]] == [
            (x["id"], x["dim"], x["length"]) for x in golden["nodes"]
        ]
        assert len(data["nodes"]) == 26

    def test_move_edges(self, golden, graph):
        edges = {(e["source"], e["target"]) for e in hasse_to_json(graph)["edges"]}
        expected = {tuple(e) for e in golden["same_length_edges"] + golden["length_dropping_edges"]}
        assert edges == expected

    def test_cover_edges(self, golden):
        got = {(str(s), str(t)) for s in enumerate_involutions(5) for t in hasse_covers(s)}
        assert got == {tuple(e) for e in golden["cover_edges"]}

    def test_json_roundtrip(self, graph):
        data = hasse_to_json(graph)
        assert json.loads(json.dumps(data)) == data
        assert all(set(e["kinds"]) <= {"drop", "up", "right", "cross", "swap"} for e in data["edges"])

    def test_dot(self, graph):
        text = hasse_to_dot(graph)
        assert text.startswith("digraph") and text.rstrip().endswith("}")
        assert text.count("->") == graph.number_of_edges()
        for length in range(3):
            assert f"cluster_l{length}" in text
        assert '"(1,2)(3,4)" [label="(1,2)(3,4)\\ndim=' in text


def test_guard(monkeypatch):
    monkeypatch.setenv(ENV_VAR, "4")
    with pytest.raises(GuardError):
        hasse_diagram(5)
    with pytest.raises(GuardError):
        closure(Involution.identity(5))
    assert len(hasse_diagram(4)) == 10
