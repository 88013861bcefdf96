"""
Sign checks for the auxiliary functions closing the four- and five-path
transfer arguments:

    lemma2:  g(x) = 8.5 + 7.5/(x-1) + 16/(x-4) - x,   x >= sqrt(130)
    lemma3:  g(x) = 14 + 15/(x-1) + 32/(x-4) - x,     x >= sqrt(310)

Both are strictly decreasing for x > 4; the check confirms g < 0 and the
decrease on a grid.
"""
import math
import time
from typing import Callable, Dict, List, Optional, Sequence

from ..lib.errors import HypothesisError
from ..lib.logging import log_verdict
from ..lib.metrics import record_verdict
from .reports import LemmaReport, Verdict


def g_lemma2(x: float) -> float:
    return 8.5 + 7.5 / (x - 1) + 16 / (x - 4) - x


def g_lemma3(x: float) -> float:
    return 14 + 15 / (x - 1) + 32 / (x - 4) - x


G_FUNCTIONS: Dict[str, Callable[[float], float]] = {
    "lemma2": g_lemma2,
    "lemma3": g_lemma3,
}

DOMAIN_START: Dict[str, float] = {
    "lemma2": math.sqrt(130),
    "lemma3": math.sqrt(310),
}


def default_grid(which: str, points: int = 50, x_max: float = 1000.0) -> List[float]:
    start = DOMAIN_START[which]
    step = (x_max - start) / (points - 1)
    return [start + i * step for i in range(points)]


def check_gfun(which: str, x_grid: Optional[Sequence[float]] = None) -> LemmaReport:
    """PASS iff g < 0 at every grid point and g strictly decreases along the sorted grid"""
    if which not in G_FUNCTIONS:
        raise HypothesisError(f"unknown g-function {which!r}; expected one of {sorted(G_FUNCTIONS)}")
    g = G_FUNCTIONS[which]
    start = DOMAIN_START[which]
    grid = sorted(set(default_grid(which) if x_grid is None else x_grid))
    if not grid:
        raise HypothesisError("empty x grid")
    if grid[0] < start * (1 - 1e-12):
        raise HypothesisError(f"grid point {grid[0]} outside the domain x >= {start:.12g}")
    started = time.perf_counter()

    values = [g(x) for x in grid]
    positive = [x for x, v in zip(grid, values) if v >= 0]
    rises = [grid[i + 1] for i in range(len(grid) - 1) if values[i + 1] >= values[i]]
    verdict = Verdict.FAIL if positive or rises else Verdict.PASS

    report = LemmaReport(
        lemma=f"gfun-{which}",
        params={"which": which, "grid_points": len(grid), "x_min": grid[0], "x_max": grid[-1]},
        verdict=verdict,
        margin=-max(values),
        details={"g_at_start": values[0], "non_negative_at": positive, "increase_at": rises},
    )
    report.runtime_s = time.perf_counter() - started
    record_verdict(report.lemma, verdict.value)
    log_verdict(report.lemma, verdict.value, report.params, report.margin)
    return report
