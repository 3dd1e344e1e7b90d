from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from borbits.involutions import (
    Involution,
    drop_cycle,
    enumerate_involutions,
    involution_count,
    m_positions,
    m_set,
    matrix_of,
    orbit_dimension,
    orbit_shape,
    project,
    r_values,
)
from borbits.linalg import centralizer_dimension, is_zero, matmul, rational_rank


def inv(text, n=None):
    return Involution.parse(text, n)


@st.composite
def involutions(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    return draw(st.sampled_from(enumerate_involutions(n)))


class TestConstruction:
    def test_canonical_order(self):
        s = Involution(8, ((4, 6), (7, 1), (2, 3)))
        assert s.cycles == ((1, 7), (2, 3), (4, 6))
        assert str(s) == "(1,7)(2,3)(4,6)"

    @pytest.mark.parametrize(
        "cycles, n",
        [(((1, 2), (2, 3)), 3), (((1, 1),), 2), (((0, 2),), 3), (((1, 5),), 4)],
    )
    def test_rejects_bad_cycles(self, cycles, n):
        with pytest.raises(ValueError):
            Involution(n, cycles)

    def test_parse_forms(self):
        assert inv("(1,7)(2,3)(4,6)").n == 7
        assert inv("(1,7)(2,3)(4,6)", 8).n == 8
        assert inv("id", 4) == Involution.identity(4)
        assert inv('{"n": 8, "cycles": [[1,7],[2,3],[4,6]]}') == inv("(1,7)(2,3)(4,6)", 8)
        with pytest.raises(ValueError):
            inv("(1,2)x")
        with pytest.raises(ValueError):
            inv('{"n": 8, "cycles": []}', 5)

    @given(involutions())
    def test_json_roundtrip(self, s):
        assert Involution.from_json(s.to_json()) == s
        assert inv(str(s), s.n) == s

    def test_identity_json(self):
        assert Involution.identity(3).to_json() == {"n": 3, "cycles": []}


class TestEnumeration:
    def test_n1(self):
        assert enumerate_involutions(1) == [Involution.identity(1)]

    def test_counts(self):
        assert [len(enumerate_involutions(n)) for n in range(1, 9)] == [1, 2, 4, 10, 26, 76, 232, 764]
        assert [involution_count(n) for n in range(1, 9)] == [1, 2, 4, 10, 26, 76, 232, 764]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_permutation_filter(self, n):
        brute = {
            p for p in permutations(range(1, n + 1)) if all(p[p[i] - 1] == i + 1 for i in range(n))
        }
        assert {s.as_permutation() for s in enumerate_involutions(n)} == brute

    def test_order_is_deterministic(self):
        invs = enumerate_involutions(5)
        assert invs[0] == Involution.identity(5)
        assert [s.cycles for s in invs] == sorted(s.cycles for s in invs)
        assert len(set(invs)) == len(invs)


class TestMatrixAndProjection:
    def test_matrix_of(self):
        m = matrix_of(inv("(1,7)(2,3)(4,6)", 8))
        ones = {(r + 1, c + 1) for r in range(8) for c in range(8) if m[r][c]}
        assert ones == {(1, 7), (2, 3), (4, 6)}
        assert is_zero(matrix_of(Involution.identity(3)))

    @given(involutions())
    def test_square_zero(self, s):
        m = matrix_of(s)
        assert is_zero(matmul(m, m))

    def test_project_examples(self):
        s = inv("(1,8)(2,5)(3,4)(6,7)")
        assert project(s, 2, 6) == inv("(2,5)(3,4)", 8)
        assert project(s, 1, 8) == s
        assert project(inv("(1,7)(2,3)(4,6)"), 4, 5) == Involution.identity(7)
        with pytest.raises(ValueError):
            project(s, 5, 3)

    @given(involutions(), st.data())
    def test_project_composes(self, s, data):
        a = data.draw(st.integers(1, s.n))
        b = data.draw(st.integers(a, s.n))
        c = data.draw(st.integers(a, b))
        d = data.draw(st.integers(c, b))
        assert project(project(s, a, b), c, d) == project(s, max(a, c), min(b, d))


class TestCycleStatistics:
    def test_drop_cycle(self):
        assert drop_cycle(inv("(1,4)(2,3)"), 1) == inv("(2,3)", 4)
        s = inv("(1,6)(2,3)(4,5)(7,8)(9,12)(10,11)")
        assert drop_cycle(s, 5) == inv("(1,6)(2,3)(4,5)(7,8)(10,11)", 12)
        assert drop_cycle(inv("(1,5)"), 1) == Involution.identity(5)
        with pytest.raises(ValueError):
            drop_cycle(s, 7)

    def test_m_set(self):
        assert m_set(inv("(1,4)(2,3)")) == [(1, 4)]
        assert m_set(Involution.identity(4)) == []
        assert m_set(inv("(1,6)(2,3)(4,5)(7,8)(9,12)(10,11)")) == [(1, 6), (7, 8), (9, 12)]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_m_set_rules_agree(self, n):
        for s in enumerate_involutions(n):
            assert m_set(s) == [s.cycles[p - 1] for p in m_positions(s)]

    def test_r_values(self):
        assert r_values(inv("(1,6)(3,4)(5,7)")) == [0, 3]
        # both counts see j_1 = 2; the centralizer oracle (dim 4 = 8 - 2 - r_2) agrees
        assert r_values(inv("(1,2)(3,4)")) == [2]
        assert orbit_dimension(inv("(1,2)(3,4)")) == 10 - centralizer_dimension(matrix_of(inv("(1,2)(3,4)")))
        assert r_values(inv("(2,5)")) == []
        assert r_values(Involution.identity(3)) == []

    def test_dimension_examples(self):
        assert orbit_dimension(Involution.identity(6)) == 0
        for n in range(2, 9):
            assert orbit_dimension(Involution(n, ((1, n),))) == 1
        assert orbit_dimension(inv("(1,6)(3,4)(5,7)")) == 10

    @pytest.mark.parametrize("n", range(1, 7))
    def test_dimension_matches_centralizer(self, n):
        for s in enumerate_involutions(n):
            assert orbit_dimension(s) == n * (n + 1) // 2 - centralizer_dimension(matrix_of(s))

    def test_orbit_shape(self):
        assert orbit_shape(Involution.identity(5)) == (5,)
        s = inv("(1,7)(2,3)(4,6)", 8)
        assert orbit_shape(s) == (5, 3)
        assert rational_rank(matrix_of(s)) == 3
        assert orbit_shape(inv("(1,2)(3,4)")) == (2, 2)
