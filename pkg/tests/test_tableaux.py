import json
from itertools import combinations

import pytest

from borbits.covers import closure, lower_covers_lower_rank
from borbits.involutions import Involution, orbit_dimension, orbit_shape
from borbits.tableaux import (
    TwoColumnTableau,
    brute_force_tableau_covers,
    enumerate_tableaux,
    hook_length_count,
    involution_of_tableau,
    orbital_closure,
    orbital_variety_orbits,
    tableau_covers,
    tableau_leq,
    tableau_move,
    two_column_count,
)
from reference_data import TABLEAU_MOVES, TABLEAU_T, TABLEAU_T_SIGMA

T = TwoColumnTableau(*TABLEAU_T)
SMALL = TwoColumnTableau((1, 2), (3, 4))


def inv(text, n=None):
    return Involution.parse(text, n)


class TestConstruction:
    @pytest.mark.parametrize(
        "col1, col2",
        [((1, 4), (2, 3)), ((1, 2, 2), (3,)), ((2, 1), (3,)), ((1,), (2, 3)), ((1, 2), (4,)), ((2,), (1,))],
    )
    def test_invalid(self, col1, col2):
        with pytest.raises(ValueError):
            TwoColumnTableau(col1, col2)

    def test_parse_forms(self):
        assert TwoColumnTableau.parse("1,2,3,6/4,5,7,8") == T
        assert TwoColumnTableau.parse(json.dumps(T.to_json())) == T
        assert TwoColumnTableau.parse("1,2") == TwoColumnTableau((1, 2))
        with pytest.raises(ValueError):
            TwoColumnTableau.parse("1,x/2")

    def test_render(self):
        assert str(SMALL) == "1 3\n2 4"
        assert str(TwoColumnTableau((1, 2, 3), (4,))) == "1 4\n2\n3"

    def test_shape(self):
        assert T.shape == (4, 4) and T.n == 8
        assert TwoColumnTableau((1,)).shape == (1,)


class TestInvolution:
    def test_examples(self):
        assert involution_of_tableau(T) == inv(TABLEAU_T_SIGMA, 8)
        assert involution_of_tableau(TwoColumnTableau((1,))) == Involution.identity(1)
        assert involution_of_tableau(SMALL) == inv("(2,3)(1,4)", 4)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_injective_and_shape(self, n):
        tabs = enumerate_tableaux(n)
        images = [involution_of_tableau(t) for t in tabs]
        assert len(set(images)) == len(tabs)
        for t, s in zip(tabs, images):
            assert s.length == len(t.col2)
            assert orbit_shape(s) == t.shape


class TestCounting:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_counts(self, n):
        tabs = enumerate_tableaux(n)
        assert len(tabs) == len(set(tabs))
        for k in range(n // 2 + 1):
            shape = tuple(p for p in (n - k, k) if p)
            count = sum(1 for t in tabs if len(t.col2) == k)
            assert count == two_column_count(n, k) == hook_length_count(shape)

    def test_hook_lengths(self):
        assert hook_length_count((3, 2)) == 5
        assert hook_length_count((3, 2, 1)) == 16


class TestMoves:
    @pytest.mark.parametrize("entry, expected", sorted(TABLEAU_MOVES.items()))
    def test_displayed(self, entry, expected):
        s = T.col2.index(entry) + 1
        assert tableau_move(T, s) == TwoColumnTableau(*expected)

    def test_trivial(self):
        assert tableau_move(TwoColumnTableau((1,), (2,)), 1) == TwoColumnTableau((1, 2))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            tableau_move(T, 5)
        with pytest.raises(ValueError):
            tableau_move(T, 0)


class TestCovers:
    def test_examples(self):
        assert tableau_covers(T) == {TwoColumnTableau(*TABLEAU_MOVES[8])}
        assert tableau_covers(SMALL) == {TwoColumnTableau((1, 2, 4), (3,))}
        assert tableau_covers(TwoColumnTableau((1, 2, 3))) == set()

    @pytest.mark.parametrize("n", range(1, 8))
    def test_brute_force(self, n):
        for t in enumerate_tableaux(n):
            assert tableau_covers(t) == brute_force_tableau_covers(t)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_length_dropping_covers_of_image(self, n):
        for t in enumerate_tableaux(n):
            images = {involution_of_tableau(s) for s in tableau_covers(t)}
            assert images == lower_covers_lower_rank(involution_of_tableau(t))


class TestOrder:
    def test_reflexive_and_cover_direction(self):
        assert tableau_leq(T, T)
        above = TwoColumnTableau(*TABLEAU_MOVES[8])
        assert tableau_leq(T, above) and not tableau_leq(above, T)

    def test_incomparable_shapes(self):
        tabs = enumerate_tableaux(4)
        pairs = [
            (a, b)
            for a in tabs if a.shape == (3, 1)
            for b in tabs if b.shape == (2, 2)
            if not tableau_leq(a, b) and not tableau_leq(b, a)
        ]
        assert pairs
        assert (TwoColumnTableau((1, 3, 4), (2,)), SMALL) in pairs

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            tableau_leq(T, SMALL)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_partial_order(self, n):
        tabs = enumerate_tableaux(n)
        for a, b in combinations(tabs, 2):
            assert not (tableau_leq(a, b) and tableau_leq(b, a))


class TestOrbitalVarieties:
    def test_examples(self):
        assert orbital_variety_orbits(SMALL) == {inv("(1,4)(2,3)", 4), inv("(1,3)(2,4)", 4)}
        assert orbital_variety_orbits(TwoColumnTableau((1, 2, 3))) == {Involution.identity(3)}

    @pytest.mark.parametrize("n", range(1, 8))
    def test_dense_orbit(self, n):
        for t in enumerate_tableaux(n):
            sigma = involution_of_tableau(t)
            orbits = orbital_variety_orbits(t)
            assert sigma in orbits
            top = orbit_dimension(sigma)
            assert all(orbit_dimension(s) < top for s in orbits - {sigma})

    def test_closure_example(self):
        got = orbital_closure(T)
        assert T in got and TwoColumnTableau(*TABLEAU_MOVES[8]) in got
        assert TwoColumnTableau(tuple(range(1, 9))) in got
        # transitive closure over covers agrees with direct filtering
        reach, todo = {T}, [T]
        while todo:
            for s in tableau_covers(todo.pop()):
                if s not in reach:
                    reach.add(s)
                    todo.append(s)
        assert reach == got

    @pytest.mark.parametrize("n", range(1, 8))
    def test_union_decomposition(self, n):
        for t in enumerate_tableaux(n):
            union = set().union(*(orbital_variety_orbits(s) for s in orbital_closure(t)))
            assert union == closure(involution_of_tableau(t))
