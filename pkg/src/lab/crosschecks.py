"""
Cross-checks between independent computations

    series     fixed-point root of the multipartite series vs direct eigensolve
    anchors    closed-form radii of K_{2,n-2} and stars
    observation  closed-form C_ell test on K_2 ∨ forest vs cycle search
    containment  exhaustive winner vs restricted-family winner
    rayleigh   rho(G') - rho(G) against the Rayleigh gain of the edit

Every check returns LemmaReports so sweeps, reports and exit codes treat
them like the lemma verdicts.
"""
import logging
import math
import time
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config import config
from ..lib.errors import BracketError, SeriesDivergenceError
from ..lib.logging import log_verdict
from ..lib.metrics import record_verdict
from ..graphs.constructions import (
    PathPartition,
    complete_bipartite,
    complete_graph,
    forest_join,
    star,
)
from ..graphs.core import Graph
from ..graphs.cycles import forest_join_cl_free, has_cycle_of_length
from ..graphs.graph6 import encode_str
from ..multipartite.fixed_point import solve_series_root
from ..multipartite.spec import MultipartiteSpec
from ..spectral.rewire import apply_edits, rewire_gain
from ..spectral.solver import spectral_radius
from ..spex.search import TIE_TOL, brute_force_spex, restricted_spex
from ..workers.pool import run_ordered
from .named import parse_graph_name
from .reports import LemmaReport, Verdict

logger = logging.getLogger(__name__)

SERIES_AGREEMENT = 1e-7
ANCHOR_AGREEMENT = 1e-9
RAYLEIGH_SLACK = 1e-9


def _finish(report: LemmaReport, started: float) -> LemmaReport:
    report.runtime_s = time.perf_counter() - started
    record_verdict(report.lemma, report.verdict.value)
    log_verdict(report.lemma, report.verdict.value, report.params, report.margin)
    return report


# ==================== Series root vs eigensolve ====================

def check_series_root(spec: MultipartiteSpec, label: str, tol: Optional[float] = None) -> LemmaReport:
    """PASS iff the series root lies within 1e-7 of the direct eigensolve"""
    started = time.perf_counter()
    graph = spec.realize()
    direct = spectral_radius(graph, tol).rho
    params = {"spec": label, "n": spec.n, "r": spec.r}
    try:
        root = solve_series_root(spec, tol)
    except (BracketError, SeriesDivergenceError) as e:
        report = LemmaReport(
            lemma="series-root",
            params=params,
            verdict=Verdict.INCONCLUSIVE,
            rho2=direct,
            graph6_2=encode_str(graph),
            details={"reason": str(e)},
        )
        return _finish(report, started)

    difference = abs(root.root - direct)
    report = LemmaReport(
        lemma="series-root",
        params=params,
        verdict=Verdict.PASS if difference <= SERIES_AGREEMENT else Verdict.FAIL,
        margin=SERIES_AGREEMENT - difference,
        rho1=root.root,
        rho2=direct,
        graph6_2=encode_str(graph),
        details={"bracket": [root.lo, root.hi], "bisections": root.bisections,
                 "series_evals": root.series_evals},
    )
    return _finish(report, started)


def _random_part_graph(rng: np.random.Generator, size: int) -> Tuple[str, Optional[Graph]]:
    kind = int(rng.integers(0, 4))
    if kind == 0 or size < 2:
        return f"E{size}", None
    if kind == 1:
        return f"P{size}", parse_graph_name(f"P{size}")
    if kind == 2:
        k = int(rng.integers(1, size // 2 + 1))
        name = f"{k}P2"
        return name, parse_graph_name(name)
    k = min(size, 3)
    return f"K{k}", complete_graph(k)


def random_specs(count: int, seed: Optional[int] = None, max_n: int = 60) -> List[Tuple[str, MultipartiteSpec]]:
    """Seeded multipartite specs with 2 to 4 parts and n <= max_n"""
    rng = np.random.default_rng(config.SEED if seed is None else seed)
    specs = []
    while len(specs) < count:
        r = int(rng.integers(2, 5))
        sizes = [int(rng.integers(1, max(2, max_n // r) + 1)) for _ in range(r)]
        if sum(sizes) > max_n:
            continue
        parts, names = [], []
        for size in sizes:
            name, graph = _random_part_graph(rng, size)
            parts.append((size, graph))
            names.append(f"{size}:{name}")
        specs.append((",".join(names), MultipartiteSpec.of(parts)))
    return specs


def anchored_specs() -> List[Tuple[str, MultipartiteSpec]]:
    """K_{2,4}, the star K_1 ∨ E_9 and K_2 ∨ (P_4 ∪ 2 P_3)"""
    return [
        ("2:E2,4:E4", MultipartiteSpec.of([(2, None), (4, None)])),
        ("1:E1,9:E9", MultipartiteSpec.of([(1, None), (9, None)])),
        ("K2|P4+2P3", MultipartiteSpec.from_join(complete_graph(2), parse_graph_name("P4+2P3"))),
    ]


def _run_series(args) -> LemmaReport:
    label, spec, tol = args
    return check_series_root(spec, label, tol)


def series_sweep(
    count: int = 100,
    seed: Optional[int] = None,
    max_n: int = 60,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
) -> List[LemmaReport]:
    items = [(label, spec, tol) for label, spec in anchored_specs() + random_specs(count, seed, max_n)]
    return run_ordered(_run_series, items, jobs)


# ==================== Closed-form anchors ====================

def check_anchor(name: str, graph: Graph, expected: float, tol: Optional[float] = None) -> LemmaReport:
    started = time.perf_counter()
    value = spectral_radius(graph, tol).rho
    difference = abs(value - expected)
    report = LemmaReport(
        lemma="anchor",
        params={"graph": name, "n": graph.n},
        verdict=Verdict.PASS if difference <= ANCHOR_AGREEMENT else Verdict.FAIL,
        margin=ANCHOR_AGREEMENT - difference,
        rho1=value,
        rho2=expected,
        graph6_1=encode_str(graph),
    )
    return _finish(report, started)


def _run_anchor(args) -> LemmaReport:
    kind, size, tol = args
    if kind == "K2n":
        return check_anchor(f"K2,{size - 2}", complete_bipartite(2, size - 2), math.sqrt(2 * size - 4), tol)
    return check_anchor(f"S{size}", star(size), math.sqrt(size), tol)


def anchor_sweep(
    n_max: int = 50,
    m_max: int = 400,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
) -> List[LemmaReport]:
    """rho(K_{2,n-2}) = sqrt(2n-4) for 4 <= n <= n_max and rho(K_1 ∨ E_m) = sqrt(m) for 1 <= m <= m_max"""
    items = [("K2n", n, tol) for n in range(4, n_max + 1)]
    items += [("star", m, tol) for m in range(1, m_max + 1)]
    return run_ordered(_run_anchor, items, jobs)


# ==================== Forest-join cycle observation ====================

def _all_partitions(total: int, max_part: int):
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _all_partitions(total - first, first):
            yield (first,) + rest


def check_observation(ell: int, max_order: int = 12) -> LemmaReport:
    """
    For every linear forest of order <= max_order, the closed form agrees
    with a direct C_ell search on K_2 ∨ forest.
    """
    started = time.perf_counter()
    hub = complete_graph(2)
    checked = 0
    disagreements = []
    for order in range(1, max_order + 1):
        for parts in _all_partitions(order, order):
            partition = PathPartition(parts)
            closed_form = forest_join_cl_free(partition, ell)
            searched = not has_cycle_of_length(forest_join(hub, partition), ell)
            checked += 1
            if closed_form != searched:
                disagreements.append(str(partition))
    report = LemmaReport(
        lemma="observation",
        params={"ell": ell, "max_order": max_order},
        verdict=Verdict.FAIL if disagreements else Verdict.PASS,
        details={"checked": checked, "disagreements": disagreements},
    )
    return _finish(report, started)


def _run_observation(args) -> LemmaReport:
    return check_observation(*args)


def observation_sweep(
    max_order: int = 12,
    ells: Sequence[int] = tuple(range(5, 16)),
    jobs: Optional[int] = None,
) -> List[LemmaReport]:
    return run_ordered(_run_observation, [(ell, max_order) for ell in ells], jobs)


# ==================== Exhaustive vs restricted winner ====================

def check_containment(n: int, ell: int, tol: Optional[float] = None) -> LemmaReport:
    """The exhaustive family contains the restricted one, so its winner's rho is at least as large"""
    started = time.perf_counter()
    brute = brute_force_spex(n, ell, "INTERNAL", tol)
    restricted = restricted_spex(n, ell, tol, jobs=1)
    if restricted.rho is None:
        margin = None
        verdict = Verdict.PASS
    else:
        margin = (brute.rho if brute.rho is not None else -math.inf) - restricted.rho
        verdict = Verdict.PASS if margin >= -TIE_TOL else Verdict.FAIL
    report = LemmaReport(
        lemma="containment",
        params={"n": n, "ell": ell},
        verdict=verdict,
        margin=margin,
        rho1=brute.rho,
        rho2=restricted.rho,
        graph6_1=brute.winner_graph6,
        graph6_2=restricted.winner_graph6,
        details={"brute_accepted": brute.accepted, "restricted_examined": restricted.examined},
    )
    return _finish(report, started)


def _run_containment(args) -> LemmaReport:
    return check_containment(*args)


def containment_sweep(
    n_min: int = 5,
    n_max: int = 7,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
) -> List[LemmaReport]:
    items = [(n, ell, tol) for n in range(n_min, n_max + 1) for ell in range(5, n + 1)]
    return run_ordered(_run_containment, items, jobs)


# ==================== Rayleigh bound ====================

def check_rayleigh(
    g: Graph,
    removed: Sequence[Tuple[int, int]],
    added: Sequence[Tuple[int, int]],
    tol: Optional[float] = None,
) -> LemmaReport:
    """PASS iff rho(G') - rho(G) >= rewire_gain(G, edits, Perron(G)) - 1e-9"""
    started = time.perf_counter()
    before = spectral_radius(g, tol)
    edited = apply_edits(g, removed, added)
    after = spectral_radius(edited, tol)
    gain = rewire_gain(g, removed, added, before.perron)
    margin = (after.rho - before.rho) - gain
    report = LemmaReport(
        lemma="rayleigh",
        params={"n": g.n, "removed": [list(e) for e in removed], "added": [list(e) for e in added]},
        verdict=Verdict.PASS if margin >= -RAYLEIGH_SLACK else Verdict.FAIL,
        margin=margin,
        rho1=before.rho,
        rho2=after.rho,
        graph6_1=encode_str(g),
        graph6_2=encode_str(edited),
        details={"gain": gain},
    )
    return _finish(report, started)


def random_edits(count: int, seed: Optional[int] = None, max_n: int = 30):
    """Seeded (graph, removed, added) triples, each a single edge added or removed"""
    rng = np.random.default_rng(config.SEED if seed is None else seed)
    edits = []
    while len(edits) < count:
        n = int(rng.integers(3, max_n + 1))
        p = float(rng.uniform(0.1, 0.6))
        upper = np.triu(rng.random((n, n)) < p, 1)
        g = Graph(upper | upper.T)
        u, v = sorted(int(i) for i in rng.choice(n, size=2, replace=False))
        if g.has_edge(u, v):
            edits.append((g, [(u, v)], []))
        else:
            edits.append((g, [], [(u, v)]))
    return edits


def _run_rayleigh(args) -> LemmaReport:
    return check_rayleigh(*args)


def rayleigh_sweep(
    count: int = 500,
    seed: Optional[int] = None,
    max_n: int = 30,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
) -> List[LemmaReport]:
    items = [(g, removed, added, tol) for g, removed, added in random_edits(count, seed, max_n)]
    return run_ordered(_run_rayleigh, items, jobs)
