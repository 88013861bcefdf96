"""
Exact walk identities and bounds

Fact 1 (partial binomial sums), the path walk-difference identity and the
crossing-walk series bound on paths. Everything here is exact integer or
rational arithmetic except the final comparison of the series bound.
"""
import logging
import math
import time
from fractions import Fraction
from typing import List, Sequence

from ..lib.errors import HypothesisError
from ..lib.logging import log_verdict
from ..lib.metrics import record_verdict
from ..graphs.constructions import build_path
from ..walks.engine import crossing_counts, walk_counts
from ..walks.series import certified_terms
from .reports import LemmaReport, Verdict

logger = logging.getLogger(__name__)


def _finish(report: LemmaReport, started: float) -> LemmaReport:
    report.runtime_s = time.perf_counter() - started
    record_verdict(report.lemma, report.verdict.value)
    log_verdict(report.lemma, report.verdict.value, report.params, report.margin)
    return report


# ==================== Fact 1 ====================

def fact1_sides(n: int, ell: int) -> tuple:
    """(sum_{i<=ell} C(n, i), (5/4) n^ell / ell!) as exact rationals"""
    lhs = Fraction(sum(math.comb(n, i) for i in range(ell + 1)))
    rhs = Fraction(5, 4) * Fraction(n ** ell, math.factorial(ell))
    return lhs, rhs


def check_fact1(n: int, ell: int) -> bool:
    """C(n,0) + ... + C(n,ell) <= (5/4) n^ell / ell!  for n >= 4 ell >= 0"""
    if ell < 0 or n < 4 * ell:
        raise HypothesisError(f"need n >= 4*ell >= 0, got n={n}, ell={ell}")
    lhs, rhs = fact1_sides(n, ell)
    return lhs <= rhs


def fact1_report(ell_max: int = 15, n_max: int = 60) -> LemmaReport:
    """Fact 1 over every 0 <= ell <= ell_max, 4 ell <= n <= n_max"""
    started = time.perf_counter()
    failures = []
    tightest = None
    checked = 0
    for ell in range(ell_max + 1):
        for n in range(4 * ell, n_max + 1):
            lhs, rhs = fact1_sides(n, ell)
            checked += 1
            slack = float((rhs - lhs) / rhs)
            if tightest is None or slack < tightest[0]:
                tightest = (slack, n, ell)
            if lhs > rhs:
                failures.append([n, ell])
    report = LemmaReport(
        lemma="fact1",
        params={"ell_max": ell_max, "n_max": n_max},
        verdict=Verdict.FAIL if failures else Verdict.PASS,
        margin=tightest[0] if tightest else None,
        details={
            "checked": checked,
            "failures": failures,
            "tightest": {"n": tightest[1], "ell": tightest[2]} if tightest else None,
        },
    )
    return _finish(report, started)


# ==================== Walk difference on two paths ====================

def path_walk_table(max_order: int, max_length: int) -> List[List[int]]:
    """table[m][l-1] = W^l(P_m) for 0 <= m <= max_order"""
    return [walk_counts(build_path(m), max_length) for m in range(max_order + 1)]


def check_wdiff(n1: int, n2: int, max_length: int) -> LemmaReport:
    """
    W^l(P_n1 ∪ P_n2) - W^l(P_{n1-1} ∪ P_{n2+1}) == W^l_{u_1, u_{n2+2}}(P_n1)
    as exact integers for 1 <= l <= max_length. n2 = 0 is accepted as a probe
    outside the stated range n1 >= n2 + 2 >= 3.
    """
    if n2 < 0 or n1 < max(3, n2 + 2):
        raise HypothesisError(f"need n1 >= n2 + 2 and n1 >= 3, got n1={n1}, n2={n2}")
    if max_length < 1:
        raise HypothesisError(f"max_length must be positive, got {max_length}")
    started = time.perf_counter()

    table = path_walk_table(n1, max_length)
    # u_1 and u_{n2+2} are vertices 0 and n2+1 of P_n1
    crossing = crossing_counts(build_path(n1), 0, n2 + 1, max_length)
    mismatches = []
    for ell in range(1, max_length + 1):
        i = ell - 1
        lhs = table[n1][i] + table[n2][i] - table[n1 - 1][i] - table[n2 + 1][i]
        if lhs != crossing[i]:
            mismatches.append({"ell": ell, "difference": lhs, "crossing": crossing[i]})

    report = LemmaReport(
        lemma="wdiff",
        params={"n1": n1, "n2": n2, "max_length": max_length},
        verdict=Verdict.FAIL if mismatches else Verdict.PASS,
        margin=0.0 if not mismatches else -float(len(mismatches)),
        details={"mismatches": mismatches} if mismatches else {},
    )
    return _finish(report, started)


# ==================== Crossing-walk series bound ====================

def weval_rhs(x: float, dist: int) -> float:
    """(1/x^l) (10x/(x-1) e^{2l/x^2} + 32/(x-4)) with l = dist"""
    return (10 * x / (x - 1) * math.exp(2 * dist / x ** 2) + 32 / (x - 4)) / x ** dist


def _path_crossing_counts(n: int, u: int, v: int, max_length: int, table: List[List[int]]) -> List[int]:
    """
    W^l_{u,v}(P_n), u < v, by inclusion-exclusion, using that deleting
    vertices of a path leaves shorter paths: P_n - u_i = P_i ∪ P_{n-1-i}.
    """
    counts = []
    for i in range(max_length):
        full = table[n][i]
        minus_u = table[u][i] + table[n - 1 - u][i]
        minus_v = table[v][i] + table[n - 1 - v][i]
        minus_uv = table[u][i] + table[v - u - 1][i] + table[n - 1 - v][i]
        counts.append(full - minus_u - minus_v + minus_uv)
    return counts


def check_weval(n: int, dist: int, x_grid: Sequence[float], rel_tail: float = 1e-6) -> LemmaReport:
    """
    For every x in the grid and every pair u, v at distance dist in P_n,
    sum_{s>=1} W^s_{u,v}(P_n) / x^s  <=  weval_rhs(x, dist).
    The left side is summed exactly up to K terms; the remainder is bounded
    by W^s_{u,v} <= W^s(P_n) <= n 2^s and added before comparing.
    """
    if n < 3:
        raise HypothesisError(f"path order must be at least 3, got {n}")
    if not 2 <= dist <= n - 1:
        raise HypothesisError(f"distance must lie in 2..{n - 1}, got {dist}")
    if not x_grid:
        raise HypothesisError("empty x grid")
    floor = max(math.sqrt(n), 5.0)
    bad = [x for x in x_grid if x < floor * (1 - 1e-12)]
    if bad:
        raise HypothesisError(f"grid points {bad} below max(sqrt(n), 5) = {floor:.12g}")
    started = time.perf_counter()

    rhs_values = [weval_rhs(x, dist) for x in x_grid]
    terms = [certified_terms(n, 2, x, rel_tail * rhs) for x, rhs in zip(x_grid, rhs_values)]
    max_terms = max(terms)
    table = path_walk_table(n, max_terms)
    crossing = {
        (u, u + dist): _path_crossing_counts(n, u, u + dist, max_terms, table)
        for u in range(n - dist)
    }

    worst = None
    violations = []
    for x, rhs, k in zip(x_grid, rhs_values, terms):
        tail = n * (2 / x) ** (k + 1) / (1 - 2 / x)
        for (u, v), counts in crossing.items():
            lhs = sum(counts[s - 1] / x ** s for s in range(1, k + 1)) + tail
            slack = (rhs - lhs) / rhs
            if worst is None or slack < worst[0]:
                worst = (slack, x, [u, v])
            if lhs > rhs:
                violations.append({"x": x, "u": u, "v": v, "lhs": lhs, "rhs": rhs})

    details = {"terms": max_terms, "tightest_x": worst[1], "tightest_pair": worst[2]}
    if violations:
        details["violations"] = violations
    report = LemmaReport(
        lemma="weval",
        params={"n": n, "dist": dist, "grid_points": len(x_grid),
                "x_min": min(x_grid), "x_max": max(x_grid)},
        verdict=Verdict.FAIL if violations else Verdict.PASS,
        margin=worst[0],
        details=details,
    )
    return _finish(report, started)


def weval_grid(n: int, points: int = 20, x_max: float = 50.0) -> List[float]:
    """Evenly spaced grid from max(sqrt(n), 5) to x_max"""
    floor = max(math.sqrt(n), 5.0)
    if points == 1:
        return [floor]
    step = (x_max - floor) / (points - 1)
    return [floor + i * step for i in range(points)]
