"""
Unit tests for multipartite specs and the series-equation root finder
"""
import math

import pytest

from src.graphs.constructions import build_path, complete_graph, complete_multipartite, empty_graph
from src.lab.named import parse_graph_name
from src.lib.errors import BracketError, InvalidGraphError, SeriesDivergenceError
from src.multipartite.fixed_point import (
    f_eval,
    f_limit_gap,
    solve_rho_by_series,
    solve_series_root,
)
from src.multipartite.spec import MultipartiteSpec, Part
from src.spectral.solver import rho


class TestMultipartiteSpec:
    """Tests for MultipartiteSpec"""

    @pytest.mark.unit
    def test_needs_two_parts(self):
        with pytest.raises(InvalidGraphError):
            MultipartiteSpec.of([(3, None)])

    @pytest.mark.unit
    def test_part_must_fit(self):
        with pytest.raises(InvalidGraphError):
            Part(2, build_path(3))
        with pytest.raises(InvalidGraphError):
            Part(0, empty_graph(0))

    @pytest.mark.unit
    def test_realize_plain_multipartite(self):
        spec = MultipartiteSpec.of([(1, None), (2, None), (3, None)])
        assert spec.realize() == complete_multipartite([1, 2, 3])
        assert spec.n == 6
        assert spec.r == 3

    @pytest.mark.unit
    def test_realize_with_embedded_graph(self):
        spec = MultipartiteSpec.of([(2, complete_graph(2)), (4, build_path(3))])
        g = spec.realize()
        assert g.n == 6
        assert g.edge_count == 1 + 2 + 2 * 4
        assert spec.max_embedded_degree == 2

    @pytest.mark.unit
    def test_from_join(self):
        left, right = complete_graph(2), parse_graph_name("P3+P2")
        spec = MultipartiteSpec.from_join(left, right)
        assert spec.r == 2
        assert spec.n == 7
        assert "∨" in spec.describe()


class TestSeriesRoot:
    """The series root equals the spectral radius"""

    @pytest.mark.unit
    def test_k24_root(self):
        spec = MultipartiteSpec.of([(2, None), (4, None)])
        root = solve_series_root(spec)
        assert root.root == pytest.approx(math.sqrt(8), abs=1e-9)
        assert root.lo <= math.sqrt(8) + 1e-9
        assert root.hi >= math.sqrt(8) - 1e-9
        assert root.method == "series"

    @pytest.mark.unit
    @pytest.mark.parametrize("m", [2, 9, 50])
    def test_star_root(self, m):
        spec = MultipartiteSpec.of([(1, None), (m, None)])
        assert solve_rho_by_series(spec) == pytest.approx(math.sqrt(m), abs=1e-8)

    @pytest.mark.unit
    def test_k2_join_forest(self):
        spec = MultipartiteSpec.from_join(complete_graph(2), parse_graph_name("P4+2P3"))
        direct = rho(spec.realize())
        assert solve_rho_by_series(spec) == pytest.approx(direct, abs=1e-7)

    @pytest.mark.unit
    def test_three_parts_with_paths(self):
        spec = MultipartiteSpec.of([(5, build_path(5)), (3, None), (4, parse_graph_name("2P2"))])
        assert solve_rho_by_series(spec) == pytest.approx(rho(spec.realize()), abs=1e-7)

    @pytest.mark.unit
    def test_f_is_increasing(self):
        spec = MultipartiteSpec.of([(3, build_path(3)), (4, None)])
        values = [f_eval(spec, x).value for x in (2.5, 3.0, 4.0, 6.0)]
        assert values == sorted(values)
        assert all(f_eval(spec, x).lower <= f_eval(spec, x).upper for x in (2.5, 6.0))

    @pytest.mark.unit
    def test_f_tends_to_r(self):
        spec = MultipartiteSpec.of([(3, build_path(3)), (4, None)])
        assert f_limit_gap(spec, 1e6) < 1e-4

    @pytest.mark.unit
    def test_f_eval_diverges_below_part_radius(self):
        spec = MultipartiteSpec.of([(6, parse_graph_name("S5")), (2, None)])
        with pytest.raises(SeriesDivergenceError):
            f_eval(spec, 1.5)

    @pytest.mark.unit
    def test_bracket_failure_and_fallback(self):
        # K_1 ∨ S_50 has rho = (1 + sqrt(401)) / 2, far below the star's max degree
        spec = MultipartiteSpec.of([(51, parse_graph_name("S50")), (1, None)])
        with pytest.raises(BracketError):
            solve_series_root(spec)
        root = solve_series_root(spec, fallback=True)
        assert root.method == "eigensolve-fallback"
        assert root.root == pytest.approx(rho(spec.realize()), abs=1e-9)

    @pytest.mark.unit
    def test_f_equals_r_minus_one_at_rho(self):
        spec = MultipartiteSpec.of([(2, None), (4, None)])
        assert f_eval(spec, math.sqrt(8)).value == pytest.approx(1.0, abs=1e-10)
        forest = MultipartiteSpec.of([(2, complete_graph(2)), (6, parse_graph_name("3P2"))])
        assert f_eval(forest, rho(forest.realize())).value == pytest.approx(1.0, abs=1e-8)
