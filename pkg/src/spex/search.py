"""
Spectral extremal search over C_ell-free planar graphs

Three candidate sources share one ranking: the restricted K_2 ∨ (linear
forest) family, exhaustive internal enumeration at small order, and
newline-delimited graph6 streams. Candidates are ranked by rho; radii within
TIE_TOL of the best are ties, broken by the lexicographically smallest
graph6. The winner is then re-checked by independent predicates.
"""
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Any, Dict, Iterable, List, Optional, Union

import numpy as np

from ..config import config
from ..lib.errors import HypothesisError
from ..lib.logging import log_search
from ..lib.metrics import record_candidate
from ..graphs.constructions import (
    ExtremalParams,
    PathPartition,
    complete_graph,
    contains_spanning_k2_join,
    forest_join,
)
from ..graphs.core import Graph
from ..graphs.cycles import forest_join_cl_free, has_cycle_of_length
from ..graphs.graph6 import decode, encode_str, iter_records
from ..graphs.planarity import is_planar
from ..spectral.solver import spectral_radius
from ..workers.pool import run_ordered
from .enumeration import (
    EnumerationStats,
    enumerate_planar_cl_free,
    restricted_partitions,
    stanley_bound,
)

logger = logging.getLogger(__name__)

TIE_TOL = 1e-9


class SearchFamily(str, Enum):
    RESTRICTED = "RESTRICTED"
    BRUTE_FORCE = "BRUTE_FORCE"
    GRAPH6_STREAM = "GRAPH6_STREAM"


class SpexStatus(str, Enum):
    OK = "OK"
    NO_CANDIDATE = "NO_CANDIDATE"


class TheoremStatus(str, Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"


@dataclass
class LeaderboardEntry:
    rank: int
    graph6: str
    rho: float
    planar: bool
    cl_free: bool
    partition: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "graph6": self.graph6,
            "rho": self.rho,
            "planar": self.planar,
            "cl_free": self.cl_free,
            "partition": self.partition,
        }


@dataclass
class SpexReport:
    """Outcome of one extremal search"""

    n: int
    ell: int
    family: SearchFamily
    status: SpexStatus = SpexStatus.OK
    winner_graph6: Optional[str] = None
    winner_partition: Optional[str] = None
    rho: Optional[float] = None
    runner_up_gap: Optional[float] = None
    ties: List[str] = field(default_factory=list)
    examined: int = 0
    accepted: int = 0
    rejected: int = 0
    malformed: int = 0
    skipped: int = 0
    spanning_k2_join: Optional[bool] = None
    verified: Optional[bool] = None
    leaderboard: List[LeaderboardEntry] = field(default_factory=list)
    theorem_status: Optional[TheoremStatus] = None
    theorem_partition: Optional[str] = None
    theorem_rho: Optional[float] = None
    wall_time_s: float = 0.0

    def to_dict(self, include_timings: bool = False) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "n": self.n,
            "ell": self.ell,
            "family": self.family.value,
            "status": self.status.value,
            "winner_graph6": self.winner_graph6,
            "winner_partition": self.winner_partition,
            "rho": self.rho,
            "runner_up_gap": self.runner_up_gap,
            "ties": self.ties,
            "examined": self.examined,
            "accepted": self.accepted,
            "rejected": self.rejected,
            "malformed": self.malformed,
            "skipped": self.skipped,
            "spanning_k2_join": self.spanning_k2_join,
            "verified": self.verified,
            "leaderboard": [entry.to_dict() for entry in self.leaderboard],
        }
        if self.theorem_status is not None:
            record["theorem_status"] = self.theorem_status.value
            record["theorem_partition"] = self.theorem_partition
            record["theorem_rho"] = self.theorem_rho
        if include_timings:
            record["wall_time_s"] = self.wall_time_s
        return record


# ==================== Ranking ====================

@dataclass
class _Candidate:
    rho: float
    graph6: str
    graph: Graph
    partition: Optional[PathPartition] = None


class _Ranking:
    """Running top-k by rho, keeping every candidate tied with the best"""

    def __init__(self, size: int):
        self.size = max(1, size)
        self.top: List[_Candidate] = []
        self.ties: List[_Candidate] = []

    @property
    def best(self) -> Optional[float]:
        return self.top[0].rho if self.top else None

    def threshold(self) -> float:
        """Radius a candidate must reach to matter for the board or the ties"""
        if len(self.top) < self.size:
            return float("-inf")
        return min(self.top[-1].rho, self.top[0].rho - TIE_TOL)

    def offer(self, candidate: _Candidate) -> None:
        best = self.best
        if best is None or candidate.rho > best + TIE_TOL:
            self.ties = [c for c in self.ties + [candidate] if c.rho >= candidate.rho - TIE_TOL]
        elif candidate.rho >= best - TIE_TOL:
            self.ties.append(candidate)
        self.top.append(candidate)
        self.top.sort(key=lambda c: (-c.rho, c.graph6))
        del self.top[self.size:]

    def winner(self) -> Optional[_Candidate]:
        if not self.ties:
            return None
        return min(self.ties, key=lambda c: c.graph6)

    def runner_up_gap(self) -> Optional[float]:
        tied = {c.graph6 for c in self.ties}
        others = [c for c in self.top if c.graph6 not in tied]
        if not others or not self.top:
            return None
        return self.top[0].rho - others[0].rho


def _cl_free(g: Graph, ell: int, partition: Optional[PathPartition]) -> bool:
    if partition is not None and g.n > config.CYCLE_SEARCH_MAX_N:
        return forest_join_cl_free(partition, ell)
    return not has_cycle_of_length(g, ell)


def _finalize(
    report: SpexReport,
    ranking: _Ranking,
    started: float,
) -> SpexReport:
    winner = ranking.winner()
    if winner is None:
        report.status = SpexStatus.NO_CANDIDATE
        logger.warning("No C_%d-free planar candidate of order %d in %s", report.ell, report.n,
                       report.family.value)
    else:
        report.winner_graph6 = winner.graph6
        report.winner_partition = str(winner.partition) if winner.partition is not None else None
        report.rho = winner.rho
        report.runner_up_gap = ranking.runner_up_gap()
        report.ties = sorted(c.graph6 if c.partition is None else str(c.partition) for c in ranking.ties)
        report.spanning_k2_join = contains_spanning_k2_join(winner.graph)

        # independent re-check: decode, planarity test, cycle search, dense eigensolve
        decoded = decode(winner.graph6)
        resolved = float(np.linalg.eigvalsh(decoded.adjacency_matrix())[-1])
        report.verified = bool(
            is_planar(decoded)
            and not has_cycle_of_length(decoded, report.ell)
            and abs(resolved - winner.rho) <= TIE_TOL
        )
        if not report.verified:
            logger.error("Winner %s failed re-verification", winner.graph6)

        report.leaderboard = [
            LeaderboardEntry(
                rank=rank,
                graph6=c.graph6,
                rho=c.rho,
                planar=bool(is_planar(c.graph)),
                cl_free=_cl_free(c.graph, report.ell, c.partition),
                partition=str(c.partition) if c.partition is not None else None,
            )
            for rank, c in enumerate(ranking.top, start=1)
        ]

    report.wall_time_s = time.perf_counter() - started
    log_search(report.family.value, report.n, report.ell, report.examined, report.accepted,
               report.wall_time_s * 1000, status=report.status.value, rho=report.rho)
    return report


# ==================== Restricted family ====================

def _restricted_rho(args) -> float:
    parts, tol = args
    return spectral_radius(forest_join(complete_graph(2), PathPartition(parts)), tol).rho


def restricted_spex(
    n: int,
    ell: int,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
) -> SpexReport:
    """Maximize rho over K_2 ∨ (linear forest) with n_1 + n_2 <= ell - 3"""
    tol = config.SPECTRAL_TOL if tol is None else tol
    started = time.perf_counter()
    partitions = restricted_partitions(n, ell)
    radii = run_ordered(_restricted_rho, [(p.parts, tol) for p in partitions], jobs)

    report = SpexReport(n=n, ell=ell, family=SearchFamily.RESTRICTED)
    ranking = _Ranking(config.LEADERBOARD_SIZE)
    hub = complete_graph(2)
    for partition, value in zip(partitions, radii):
        graph = forest_join(hub, partition)
        ranking.offer(_Candidate(rho=value, graph6=encode_str(graph), graph=graph, partition=partition))
    report.examined = report.accepted = len(partitions)
    record_candidate(report.family.value, "accepted", report.accepted)
    return _finalize(report, ranking, started)


# ==================== Exhaustive and streamed families ====================

def _offer_graph(ranking: _Ranking, g: Graph, tol: float) -> None:
    if stanley_bound(g.edge_count) < ranking.threshold():
        return
    value = spectral_radius(g, tol).rho
    ranking.offer(_Candidate(rho=value, graph6=encode_str(g), graph=g))


def brute_force_spex(
    n: int,
    ell: int,
    source: Union[str, IO, Iterable, None] = "INTERNAL",
    tol: Optional[float] = None,
) -> SpexReport:
    """
    Maximize rho over all C_ell-free planar graphs of order n.

    Args:
        n: order
        ell: forbidden cycle length
        source: "INTERNAL" for exhaustive enumeration (n <= BRUTE_FORCE_MAX_N),
            or an iterable of graph6 lines; records of another order are skipped
            and malformed records counted
        tol: eigensolve tolerance
    """
    tol = config.SPECTRAL_TOL if tol is None else tol
    started = time.perf_counter()
    ranking = _Ranking(config.LEADERBOARD_SIZE)

    if source is None or (isinstance(source, str) and source.upper() == "INTERNAL"):
        report = SpexReport(n=n, ell=ell, family=SearchFamily.BRUTE_FORCE)
        stats = EnumerationStats()
        for g in enumerate_planar_cl_free(n, ell, stats):
            _offer_graph(ranking, g, tol)
        report.examined = stats.nodes
        report.accepted = stats.leaves
        report.rejected = stats.pruned
        record_candidate(report.family.value, "accepted", stats.leaves)
        record_candidate(report.family.value, "pruned", stats.pruned)
        return _finalize(report, ranking, started)

    if isinstance(source, str):
        raise HypothesisError(f"unknown search source {source!r}")
    if ell < 5 or ell > n:
        raise HypothesisError(f"need 5 <= ell <= n, got n={n}, ell={ell}")

    report = SpexReport(n=n, ell=ell, family=SearchFamily.GRAPH6_STREAM)
    for _, item in iter_records(source):
        if not isinstance(item, Graph):
            report.malformed += 1
            continue
        if item.n != n:
            report.skipped += 1
            continue
        report.examined += 1
        if not is_planar(item) or has_cycle_of_length(item, ell):
            report.rejected += 1
            continue
        report.accepted += 1
        _offer_graph(ranking, item, tol)

    family = report.family.value
    record_candidate(family, "accepted", report.accepted)
    record_candidate(family, "rejected", report.rejected)
    record_candidate(family, "malformed", report.malformed)
    if report.malformed:
        logger.warning("Skipped %d malformed graph6 records", report.malformed)
    return _finalize(report, ranking, started)


# ==================== Comparison with the extremal construction ====================

def theorem_check(
    n: int,
    ell: int,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
) -> SpexReport:
    """
    Run the restricted search and compare its winner with the extremal
    construction's linear forest. MATCH when that forest is the winner or
    tied with it. Agreement at small n is reported, never assumed.
    """
    report = restricted_spex(n, ell, tol, jobs)
    params = ExtremalParams(n, ell)
    expected = params.partition().nonzero()
    expected_graph = forest_join(complete_graph(2), expected)
    report.theorem_partition = str(expected)
    report.theorem_rho = spectral_radius(expected_graph, tol).rho

    tied = set(report.ties) | ({report.winner_partition} if report.winner_partition else set())
    report.theorem_status = TheoremStatus.MATCH if str(expected) in tied else TheoremStatus.MISMATCH
    if report.theorem_status is TheoremStatus.MISMATCH:
        logger.info("Extremal construction %s (rho=%.12g) differs from search winner %s (rho=%.12g)",
                    expected, report.theorem_rho, report.winner_partition, report.rho)
    return report
