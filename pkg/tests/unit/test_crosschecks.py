"""
Unit tests for the cross-checks between independent computations
"""
import pytest

from src.graphs.constructions import complete_graph
from src.lab.crosschecks import (
    anchor_sweep,
    anchored_specs,
    check_anchor,
    check_containment,
    check_observation,
    check_rayleigh,
    check_series_root,
    random_edits,
    random_specs,
    rayleigh_sweep,
)
from src.lab.named import parse_graph_name
from src.lab.reports import Verdict, verdict_counts
from src.multipartite.spec import MultipartiteSpec


class TestSeriesCrossCheck:
    """Series root against the direct eigensolve"""

    @pytest.mark.unit
    def test_anchored_specs_pass(self):
        for label, spec in anchored_specs():
            report = check_series_root(spec, label)
            assert report.verdict is Verdict.PASS, label
            assert report.margin >= 0

    @pytest.mark.unit
    def test_bracket_failure_is_inconclusive(self):
        spec = MultipartiteSpec.of([(51, parse_graph_name("S50")), (1, None)])
        report = check_series_root(spec, "51:S50,1:E1")
        assert report.verdict is Verdict.INCONCLUSIVE
        assert report.rho1 is None
        assert report.graph6_2 is not None
        assert "reason" in report.details

    @pytest.mark.unit
    def test_random_specs_deterministic(self):
        first = random_specs(8, seed=11, max_n=30)
        second = random_specs(8, seed=11, max_n=30)
        assert [label for label, _ in first] == [label for label, _ in second]
        assert all(2 <= spec.r <= 4 and spec.n <= 30 for _, spec in first)

    @pytest.mark.unit
    def test_random_specs_agree(self):
        for label, spec in random_specs(5, seed=2, max_n=24):
            report = check_series_root(spec, label)
            assert report.verdict is not Verdict.FAIL, label


class TestAnchors:
    """Closed-form radii"""

    @pytest.mark.unit
    def test_anchor_pass_and_fail(self):
        assert check_anchor("K3", complete_graph(3), 2.0).verdict is Verdict.PASS
        assert check_anchor("K3", complete_graph(3), 2.1).verdict is Verdict.FAIL

    @pytest.mark.unit
    def test_small_sweep(self):
        reports = anchor_sweep(n_max=8, m_max=10, jobs=1)
        assert len(reports) == 5 + 10
        assert reports[0].params["graph"] == "K2,2"
        assert reports[-1].params["graph"] == "S10"
        assert verdict_counts(reports)["PASS"] == 15


class TestObservation:
    """Closed-form cycle test against exhaustive search"""

    @pytest.mark.unit
    @pytest.mark.parametrize("ell", [5, 6, 9])
    def test_agrees(self, ell):
        report = check_observation(ell, max_order=8)
        assert report.verdict is Verdict.PASS
        assert report.details["disagreements"] == []
        # p(1) + ... + p(8)
        assert report.details["checked"] == 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22


class TestContainment:
    """Exhaustive winner dominates the restricted family"""

    @pytest.mark.unit
    @pytest.mark.parametrize("n,ell", [(5, 5), (6, 5), (6, 6)])
    def test_small_orders(self, n, ell):
        report = check_containment(n, ell)
        assert report.verdict is Verdict.PASS
        assert report.rho1 >= report.rho2 - 1e-9


class TestRayleigh:
    """rho(G') - rho(G) against the Rayleigh gain"""

    @pytest.mark.unit
    def test_single_edge_addition(self, path5):
        report = check_rayleigh(path5, [], [(0, 4)])
        assert report.verdict is Verdict.PASS
        assert report.details["gain"] > 0

    @pytest.mark.unit
    def test_single_edge_removal(self, petersen):
        report = check_rayleigh(petersen, [(0, 1)], [])
        assert report.verdict is Verdict.PASS
        assert report.rho2 < report.rho1

    @pytest.mark.unit
    def test_random_edits_are_single_edges(self):
        for g, removed, added in random_edits(20, seed=5, max_n=12):
            assert len(removed) + len(added) == 1
            for u, v in removed:
                assert g.has_edge(u, v)
            for u, v in added:
                assert not g.has_edge(u, v)

    @pytest.mark.unit
    def test_sweep(self):
        reports = rayleigh_sweep(count=25, seed=9, max_n=15, jobs=1)
        assert len(reports) == 25
        assert verdict_counts(reports)["FAIL"] == 0
