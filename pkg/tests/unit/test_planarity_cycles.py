"""
Unit tests for planarity testing and exact-length cycle detection
"""
import itertools
from typing import List, Tuple

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.graphs.constructions import (
    ExtremalParams,
    PathPartition,
    build_extremal,
    build_path,
    complete_bipartite,
    complete_graph,
    forest_join,
)
from src.graphs.core import Graph
from src.graphs.cycles import forest_join_cl_free, has_cycle_of_length
from src.graphs.planarity import WitnessKind, exceeds_edge_bound, is_planar
from src.lib.errors import HypothesisError


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _brute_force_cycle(g: Graph, ell: int) -> bool:
    """Try every ordered vertex tuple; only for tiny graphs"""
    for combo in itertools.combinations(range(g.n), ell):
        first = combo[0]
        for rest in itertools.permutations(combo[1:]):
            tour = (first,) + rest
            if all(g.has_edge(tour[i], tour[(i + 1) % ell]) for i in range(ell)):
                return True
    return False


def _routes(g: Graph, a: int, b: int, free: Tuple[int, ...]):
    """Interior vertex sequences, drawn from `free`, of paths joining a and b"""
    if g.has_edge(a, b):
        yield ()
    for length in range(1, len(free) + 1):
        for inner in itertools.permutations(free, length):
            tour = (a,) + inner + (b,)
            if all(g.has_edge(x, y) for x, y in zip(tour, tour[1:])):
                yield inner


def _routes_all(g: Graph, pairs: List[Tuple[int, int]], free: Tuple[int, ...]) -> bool:
    """Internally disjoint paths for every pair, interiors taken from `free`"""
    if not pairs:
        return True
    (a, b), rest = pairs[0], pairs[1:]
    for inner in _routes(g, a, b, free):
        if _routes_all(g, rest, tuple(v for v in free if v not in inner)):
            return True
    return False


def _has_kuratowski_subdivision(g: Graph) -> bool:
    """Exhaustive search for a subdivided K_5 or K_{3,3}"""
    degrees = g.degrees()
    for branch in itertools.combinations([v for v in range(g.n) if degrees[v] >= 4], 5):
        free = tuple(v for v in range(g.n) if v not in branch)
        if _routes_all(g, list(itertools.combinations(branch, 2)), free):
            return True
    for branch in itertools.combinations([v for v in range(g.n) if degrees[v] >= 3], 6):
        free = tuple(v for v in range(g.n) if v not in branch)
        for partners in itertools.combinations(branch[1:], 2):
            side = (branch[0],) + partners
            other = [v for v in branch if v not in side]
            if _routes_all(g, [(a, b) for a in side for b in other], free):
                return True
    return False


def _atlas_graphs() -> List[Graph]:
    """Every graph on 1 to 7 vertices, up to isomorphism"""
    return [Graph.from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() >= 1]


class TestPlanarity:
    """Tests for is_planar"""

    @pytest.mark.unit
    def test_k5_and_k33_fast_rejected(self, k5, k33):
        assert not is_planar(k5)
        assert is_planar(k5).fast_rejected
        assert not is_planar(k33)
        assert is_planar(k33).fast_rejected

    @pytest.mark.unit
    def test_petersen_needs_full_test(self, petersen):
        result = is_planar(petersen)
        assert not result
        assert not result.fast_rejected

    @pytest.mark.unit
    def test_witness_kinds(self, k5, k33, petersen):
        assert is_planar(k5, witness=True).witness.kind is WitnessKind.K5
        assert is_planar(k33, witness=True).witness.kind is WitnessKind.K33
        witness = is_planar(petersen, witness=True).witness
        assert witness is not None
        assert set(witness.edges) <= set(petersen.edges())

    @pytest.mark.unit
    def test_planar_embedding(self, triangle):
        result = is_planar(triangle, embedding=True)
        assert result
        assert sorted(result.embedding) == [0, 1, 2]
        assert sorted(result.embedding[0]) == [1, 2]

    @pytest.mark.unit
    def test_extremal_graphs_are_planar(self):
        for n, ell in [(9, 6), (20, 15), (30, 11), (40, 20)]:
            assert is_planar(build_extremal(ExtremalParams(n, ell)))

    @pytest.mark.unit
    def test_edge_bounds(self, k24):
        assert not exceeds_edge_bound(k24)
        assert exceeds_edge_bound(complete_bipartite(3, 4))
        assert not exceeds_edge_bound(complete_graph(2))

    @pytest.mark.unit
    @pytest.mark.slow
    def test_matches_kuratowski_on_all_small_graphs(self):
        graphs = _atlas_graphs()
        assert len(graphs) == 1252
        for g in graphs:
            assert bool(is_planar(g)) is not _has_kuratowski_subdivision(g), g.edges()

    @pytest.mark.unit
    def test_kuratowski_search_finds_subdivisions(self, k5, k33):
        assert _has_kuratowski_subdivision(k5)
        assert _has_kuratowski_subdivision(k33)
        # K_{3,3} with one edge subdivided
        edges = [(a, b) for a in range(3) for b in range(3, 6) if (a, b) != (0, 3)] + [(0, 6), (6, 3)]
        assert _has_kuratowski_subdivision(Graph.from_edges(7, edges))
        assert not _has_kuratowski_subdivision(complete_graph(4))

    @pytest.mark.unit
    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=3, max_value=12), st.floats(min_value=0.1, max_value=0.9), st.integers(0, 2 ** 16))
    def test_planar_graphs_respect_euler_bounds(self, n, p, seed):
        rng = np.random.default_rng(seed)
        upper = np.triu(rng.random((n, n)) < p, 1)
        g = Graph(upper | upper.T)
        if g.edge_count > 3 * n - 6:
            assert not is_planar(g)
            assert is_planar(g).fast_rejected
        if is_planar(g):
            assert g.edge_count <= 3 * n - 6
            if g.is_bipartite():
                assert g.edge_count <= 2 * n - 4

    @pytest.mark.unit
    @pytest.mark.parametrize("s,t", [(3, 4), (3, 5), (4, 4)])
    def test_dense_bipartite_rejected_by_counting(self, s, t):
        g = complete_bipartite(s, t)
        assert g.edge_count > 2 * g.n - 4
        result = is_planar(g)
        assert not result
        assert result.fast_rejected


class TestCycles:
    """Tests for has_cycle_of_length and the forest-join closed form"""

    @pytest.mark.unit
    def test_cycle_graph(self):
        c6 = _cycle(6)
        assert has_cycle_of_length(c6, 6)
        assert not any(has_cycle_of_length(c6, ell) for ell in (3, 4, 5))

    @pytest.mark.unit
    def test_complete_graph_has_every_length(self, k5):
        assert all(has_cycle_of_length(k5, ell) for ell in range(3, 6))
        assert not has_cycle_of_length(k5, 6)

    @pytest.mark.unit
    def test_bipartite_has_no_odd_cycles(self, k33):
        assert not has_cycle_of_length(k33, 3)
        assert not has_cycle_of_length(k33, 5)
        assert has_cycle_of_length(k33, 6)

    @pytest.mark.unit
    def test_petersen_girth(self, petersen):
        assert not has_cycle_of_length(petersen, 3)
        assert not has_cycle_of_length(petersen, 4)
        assert has_cycle_of_length(petersen, 5)
        assert has_cycle_of_length(petersen, 9)

    @pytest.mark.unit
    def test_rejects_short_length(self, triangle):
        with pytest.raises(HypothesisError):
            has_cycle_of_length(triangle, 2)

    @pytest.mark.unit
    def test_tree_is_acyclic(self):
        assert not any(has_cycle_of_length(build_path(8), ell) for ell in range(3, 9))

    @pytest.mark.unit
    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=3, max_value=7), st.integers(0, 2 ** 16))
    def test_matches_brute_force(self, n, seed):
        rng = np.random.default_rng(seed)
        upper = np.triu(rng.random((n, n)) < 0.5, 1)
        g = Graph(upper | upper.T)
        for ell in range(3, n + 1):
            assert has_cycle_of_length(g, ell) == _brute_force_cycle(g, ell)

    @pytest.mark.unit
    def test_extremal_graph_is_cl_free(self):
        for n, ell in [(9, 6), (12, 7), (14, 14)]:
            g = build_extremal(ExtremalParams(n, ell))
            assert not has_cycle_of_length(g, ell)
            assert has_cycle_of_length(g, ell - 1)

    @pytest.mark.unit
    @pytest.mark.parametrize("parts,ell,expected", [
        ((6, 6, 6), 15, True),
        ((7, 6), 15, False),
        ((2, 1, 1, 1, 1, 1), 6, True),
        ((3, 1), 6, False),
        ((1, 1, 1), 5, True),
    ])
    def test_forest_join_closed_form(self, parts, ell, expected):
        partition = PathPartition(parts)
        assert forest_join_cl_free(partition, ell) is expected
        searched = not has_cycle_of_length(forest_join(complete_graph(2), partition), ell)
        assert searched is expected

    @pytest.mark.unit
    def test_forest_join_closed_form_rejects_small_ell(self):
        with pytest.raises(HypothesisError):
            forest_join_cl_free(PathPartition((1,)), 4)
