"""
Unit tests for Graph and the graph constructions
"""
import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.graphs.constructions import (
    ExtremalCase,
    ExtremalParams,
    PathPartition,
    build_extremal,
    build_path,
    build_planar_reference,
    complete_graph,
    complete_multipartite,
    contains_spanning_k2_join,
    disjoint_union,
    empty_graph,
    forest_join,
    join,
    star,
)
from src.graphs.core import Graph
from src.lib.errors import HypothesisError, InvalidGraphError


class TestGraph:
    """Tests for the Graph value type"""

    @pytest.mark.unit
    def test_rejects_self_loop(self):
        adj = np.zeros((3, 3), dtype=bool)
        adj[1, 1] = True
        with pytest.raises(InvalidGraphError):
            Graph(adj)

    @pytest.mark.unit
    def test_rejects_asymmetric(self):
        adj = np.zeros((3, 3), dtype=bool)
        adj[0, 1] = True
        with pytest.raises(InvalidGraphError):
            Graph(adj)

    @pytest.mark.unit
    def test_rejects_edge_out_of_range(self):
        with pytest.raises(InvalidGraphError):
            Graph.from_edges(3, [(0, 3)])

    @pytest.mark.unit
    def test_adjacency_is_read_only(self, triangle):
        with pytest.raises(ValueError):
            triangle.adjacency[0, 1] = False

    @pytest.mark.unit
    def test_input_array_is_copied(self):
        adj = np.zeros((2, 2), dtype=bool)
        adj[0, 1] = adj[1, 0] = True
        g = Graph(adj)
        adj[0, 1] = adj[1, 0] = False
        assert g.edge_count == 1

    @pytest.mark.unit
    def test_degrees_and_edges(self, path5):
        assert path5.degrees().tolist() == [1, 2, 2, 2, 1]
        assert path5.edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]
        assert path5.max_degree == 2
        assert path5.neighbors(2) == [1, 3]

    @pytest.mark.unit
    def test_invalid_vertex(self, path5):
        with pytest.raises(InvalidGraphError):
            path5.neighbors(5)
        with pytest.raises(InvalidGraphError):
            path5.has_edge(-1, 0)

    @pytest.mark.unit
    def test_labels_do_not_affect_equality(self, path5):
        assert path5 == path5.with_labels(None)
        assert hash(path5) == hash(path5.with_labels(None))

    @pytest.mark.unit
    def test_delete_vertices(self, path5):
        g = path5.delete_vertices([2])
        assert g.n == 4
        assert g.edges() == [(0, 1), (2, 3)]

    @pytest.mark.unit
    def test_components_and_distance(self, disconnected):
        assert disconnected.components() == [[0, 1, 2], [3, 4, 5, 6], [7]]
        assert not disconnected.is_connected()
        assert disconnected.distance(3, 6) == 3
        assert disconnected.distance(0, 7) is None

    @pytest.mark.unit
    def test_bipartite(self, triangle, k24, petersen):
        assert k24.is_bipartite()
        assert not triangle.is_bipartite()
        assert not petersen.is_bipartite()

    @pytest.mark.unit
    def test_linear_forest(self, path5, triangle, star6):
        assert path5.is_linear_forest()
        assert disjoint_union([path5, build_path(2)]).is_linear_forest()
        assert not triangle.is_linear_forest()
        assert not star6.is_linear_forest()

    @pytest.mark.unit
    def test_relabel_rejects_non_permutation(self, path5):
        with pytest.raises(InvalidGraphError):
            path5.relabel([0, 0, 1, 2, 3])

    @pytest.mark.unit
    def test_networkx_round_trip(self, petersen):
        again = Graph.from_networkx(petersen.to_networkx())
        assert again == petersen
        assert nx.is_isomorphic(petersen.to_networkx(), nx.petersen_graph())

    @pytest.mark.unit
    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=1, max_value=9), st.randoms(use_true_random=False))
    def test_relabel_preserves_degree_multiset(self, n, random):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if random.random() < 0.4]
        g = Graph.from_edges(n, edges)
        perm = list(range(n))
        random.shuffle(perm)
        h = g.relabel(perm)
        assert sorted(h.degrees().tolist()) == sorted(g.degrees().tolist())
        assert h.edge_count == g.edge_count
        assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


class TestConstructions:
    """Tests for the elementary and extremal constructions"""

    @pytest.mark.unit
    def test_path_p0_is_empty(self):
        assert build_path(0).n == 0
        with pytest.raises(InvalidGraphError):
            build_path(-1)

    @pytest.mark.unit
    def test_join_edge_count(self, triangle, path5):
        g = join(triangle, path5)
        assert g.n == 8
        assert g.edge_count == 3 + 4 + 3 * 5

    @pytest.mark.unit
    def test_complete_multipartite(self):
        g = complete_multipartite([1, 2, 3])
        assert g.n == 6
        assert g.edge_count == 1 * 2 + 1 * 3 + 2 * 3

    @pytest.mark.unit
    def test_star(self, star6):
        assert star6.n == 7
        assert star6.degrees().tolist() == [6] + [1] * 6

    @pytest.mark.unit
    def test_path_partition_validation(self):
        with pytest.raises(InvalidGraphError):
            PathPartition((1, 3))
        with pytest.raises(InvalidGraphError):
            PathPartition((3, -1))
        assert PathPartition.of([1, 3, 2]).parts == (3, 2, 1)

    @pytest.mark.unit
    def test_path_partition_top_two_and_padding(self):
        assert PathPartition((5,)).top_two == 5
        assert PathPartition((5, 4, 4)).top_two == 9
        assert PathPartition((2,)).padded(3).parts == (2, 0, 0)
        assert str(PathPartition((2, 1, 1))) == "(2,1,1)"

    @pytest.mark.unit
    def test_path_partition_realize(self):
        forest = PathPartition((3, 2, 0)).realize()
        assert forest.n == 5
        assert forest.is_linear_forest()
        assert forest.edge_count == 3

    @pytest.mark.unit
    def test_forest_join(self):
        g = forest_join(complete_graph(2), PathPartition((3, 2)), extra=empty_graph(1))
        assert g.n == 8
        assert g.edge_count == 1 + 2 * 6 + 3

    @pytest.mark.unit
    def test_extremal_case_two_n20_ell15(self, extremal_20_15):
        params = ExtremalParams(20, 15)
        assert params.case is ExtremalCase.II
        assert params.partition().nonzero().parts == (6, 6, 6)
        assert build_extremal(params) == extremal_20_15

    @pytest.mark.unit
    def test_extremal_case_one_n9_ell6(self):
        params = ExtremalParams(9, 6)
        assert params.case is ExtremalCase.I
        assert (params.a, params.b) == (4, 0)
        assert params.partition().nonzero().parts == (2, 1, 1, 1, 1, 1)

    @pytest.mark.unit
    def test_extremal_n5_ell5(self):
        params = ExtremalParams(5, 5)
        assert params.partition().nonzero().parts == (1, 1, 1)
        g = build_extremal(params)
        assert g.n == 5

    @pytest.mark.unit
    @pytest.mark.parametrize("n,ell", [(8, 5), (12, 7), (30, 11), (40, 20), (25, 25)])
    def test_extremal_order_and_top_two(self, n, ell):
        params = ExtremalParams(n, ell)
        g = build_extremal(params)
        assert g.n == n
        assert params.partition().top_two == ell - 3
        assert contains_spanning_k2_join(g)

    @pytest.mark.unit
    @pytest.mark.parametrize("n,ell", [(10, 4), (5, 6)])
    def test_extremal_rejects_bad_params(self, n, ell):
        with pytest.raises(HypothesisError):
            ExtremalParams(n, ell)

    @pytest.mark.unit
    def test_planar_reference(self):
        g = build_planar_reference(8)
        assert g.n == 8
        assert g.edge_count == 1 + 2 * 6 + 5
        assert contains_spanning_k2_join(g)

    @pytest.mark.unit
    def test_spanning_k2_join_absent(self, path5, star6):
        assert not contains_spanning_k2_join(path5)
        assert not contains_spanning_k2_join(star6)
