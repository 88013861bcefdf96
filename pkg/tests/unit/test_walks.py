"""
Unit tests for exact walk counting, the walk oracle and walk series
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.graphs.constructions import build_path, complete_graph, empty_graph
from src.graphs.core import Graph
from src.lib.errors import InvalidGraphError, ScopeExceededError
from src.spectral.solver import rho
from src.walks.engine import (
    crossing_counts,
    walk_count_crossing,
    walk_count_from,
    walk_count_total,
    walk_counts,
    walk_table,
)
from src.walks.oracle import enumerate_walks_oracle, walks_crossing, walks_from
from src.walks.series import certified_terms, walk_series


def _resolvent_sum(g: Graph, x: float) -> float:
    """sum_{k>=1} 1^T (A/x)^k 1 in closed form, valid for x > rho"""
    a = g.adjacency_matrix()
    ones = np.ones(g.n)
    inverse = np.linalg.solve(np.eye(g.n) - a / x, ones)
    return float(ones @ inverse - g.n)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    seed = draw(st.integers(0, 2 ** 16))
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < 0.5, 1)
    return Graph(upper | upper.T)


class TestWalkEngine:
    """Tests for the exact walk counts"""

    @pytest.mark.unit
    def test_regular_graph_counts(self):
        # K_4 is 3-regular: W^l = 4 * 3^l
        assert walk_counts(complete_graph(4), 5) == [4 * 3 ** k for k in range(1, 6)]

    @pytest.mark.unit
    def test_path_counts(self, path5):
        assert walk_counts(path5, 3) == [8, 14, 24]
        assert walk_count_from(path5, 0, 2) == 2
        assert walk_count_from(path5, 2, 2) == 4

    @pytest.mark.unit
    def test_counts_are_exact_big_integers(self):
        # 3 * 2^200 overflows int64 and loses precision in float64
        assert walk_count_total(complete_graph(3), 200) == 3 * 2 ** 200

    @pytest.mark.unit
    def test_edgeless_graph(self):
        assert walk_counts(empty_graph(4), 3) == [0, 0, 0]

    @pytest.mark.unit
    def test_invalid_length(self, path5):
        with pytest.raises(InvalidGraphError):
            walk_count_total(path5, 0)

    @pytest.mark.unit
    def test_crossing_below_distance_is_zero(self, path5):
        # d(0, 4) = 4: walks of length < 4 cannot visit both ends
        assert crossing_counts(path5, 0, 4, 3) == [0, 0, 0]
        assert walk_count_crossing(path5, 0, 4, 4) == 2

    @pytest.mark.unit
    @pytest.mark.parametrize("n", range(2, 11))
    def test_path_crossing_non_increasing_in_distance(self, n):
        path = build_path(n)
        rows = [crossing_counts(path, 0, j, 10) for j in range(1, n)]
        for length in range(10):
            column = [row[length] for row in rows]
            assert column == sorted(column, reverse=True)

    @pytest.mark.unit
    def test_crossing_needs_distinct_vertices(self, path5):
        with pytest.raises(InvalidGraphError):
            crossing_counts(path5, 1, 1, 3)

    @pytest.mark.unit
    def test_walk_table(self, triangle):
        table = walk_table(triangle, 3, per_vertex=True)
        assert table.totals == {1: 6, 2: 12, 3: 24}
        assert table.per_vertex[2] == [4, 4, 4]
        assert table.max_length == 3
        assert table.to_dict()["totals"] == {"1": 6, "2": 12, "3": 24}


class TestWalkOracle:
    """The matrix counts agree with exhaustive enumeration"""

    @pytest.mark.unit
    def test_oracle_is_lexicographic(self, triangle):
        walks = enumerate_walks_oracle(triangle, 1)
        assert walks == [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]

    @pytest.mark.unit
    def test_oracle_caps(self):
        with pytest.raises(ScopeExceededError):
            enumerate_walks_oracle(build_path(9), 2)
        with pytest.raises(ScopeExceededError):
            enumerate_walks_oracle(build_path(3), 9)

    @pytest.mark.unit
    @settings(max_examples=40, deadline=None)
    @given(small_graphs(), st.integers(min_value=1, max_value=5))
    def test_counts_match_oracle(self, g, ell):
        walks = enumerate_walks_oracle(g, ell)
        assert walk_count_total(g, ell) == len(walks)
        for u in range(g.n):
            assert walk_count_from(g, u, ell) == len(walks_from(walks, u))

    @pytest.mark.unit
    @settings(max_examples=30, deadline=None)
    @given(small_graphs(), st.integers(min_value=1, max_value=5), st.data())
    def test_crossing_matches_oracle(self, g, ell, data):
        if g.n < 2:
            return
        u = data.draw(st.integers(0, g.n - 1))
        v = data.draw(st.integers(0, g.n - 1).filter(lambda w: w != u))
        walks = enumerate_walks_oracle(g, ell)
        assert walk_count_crossing(g, u, v, ell) == len(walks_crossing(walks, u, v))


class TestWalkSeries:
    """Tests for the walk-generating series"""

    @pytest.mark.unit
    def test_certified_regular_graph(self, triangle):
        # 2-regular on 3 vertices: S(x) = 3 * 2 / (x - 2)
        result = walk_series(triangle, 4.0)
        assert result.certified and result.converged
        assert result.tail_bound <= 1e-12
        assert result.upper == pytest.approx(3.0, abs=1e-10)

    @pytest.mark.unit
    def test_certified_terms_bound(self):
        terms = certified_terms(10, 3, 6.0, 1e-9)
        assert 10 * 0.5 ** (terms + 1) / 0.5 <= 1e-9
        assert 10 * 0.5 ** terms / 0.5 > 1e-9

    @pytest.mark.unit
    def test_heuristic_regime_between_rho_and_delta(self, star6):
        # rho = sqrt(6) < 4 < Δ = 6
        result = walk_series(star6, 4.0)
        assert not result.certified
        assert result.converged
        assert result.partial_sum == pytest.approx(_resolvent_sum(star6, 4.0), rel=1e-8)

    @pytest.mark.unit
    def test_diverges_below_rho(self, star6):
        result = walk_series(star6, 2.0)
        assert not result.converged
        assert not result.certified

    @pytest.mark.unit
    def test_edgeless_graph_is_zero(self):
        result = walk_series(empty_graph(3), 0.5)
        assert result.partial_sum == 0.0
        assert result.converged and result.certified

    @pytest.mark.unit
    @pytest.mark.parametrize("x", [0.0, -1.0, math.nan])
    def test_rejects_bad_point(self, triangle, x):
        with pytest.raises(InvalidGraphError):
            walk_series(triangle, x)

    @pytest.mark.unit
    def test_matches_resolvent(self, petersen):
        result = walk_series(petersen, 3.5, tol=1e-12)
        assert result.certified
        assert result.partial_sum == pytest.approx(_resolvent_sum(petersen, 3.5), abs=1e-9)

    @pytest.mark.unit
    def test_matches_oracle_partial_sums_at_twice_rho(self, triangle, path5, k24, star6, k5):
        depth = 8
        for g in (triangle, path5, k24, star6, k5):
            x = 2 * rho(g)
            result = walk_series(g, x, tol=1e-12)
            enumerated = sum(len(enumerate_walks_oracle(g, k)) / x ** k for k in range(1, depth + 1))
            # W^k <= n rho^k, so the terms beyond the oracle depth sum to at most n 2^-depth
            assert enumerated <= result.partial_sum + 1e-12
            assert result.partial_sum - enumerated <= g.n * 2.0 ** -depth + 1e-12
