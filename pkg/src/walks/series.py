"""
Walk-generating series  S(x) = sum_{k>=1} W^k(G) / x^k

For x > Δ(G) the tail after K terms is certified by W^k <= n Δ^k:
    tail <= n (Δ/x)^{K+1} / (1 - Δ/x).
For x <= Δ(G) the tail is estimated from the observed decay of the
terms over a window and the result is flagged as not certified.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config import config
from ..lib.errors import InvalidGraphError
from ..graphs.core import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesEval:
    """Truncated series value with a bound on the remainder"""

    x: float
    terms: int
    partial_sum: float
    tail_bound: float
    converged: bool
    certified: bool

    @property
    def upper(self) -> float:
        return self.partial_sum + self.tail_bound

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "terms": self.terms,
            "partial_sum": self.partial_sum,
            "tail_bound": self.tail_bound,
            "converged": self.converged,
            "certified": self.certified,
        }


def certified_terms(n: int, max_degree: int, x: float, tol: float) -> int:
    """Smallest K with n (Δ/x)^{K+1} / (1 - Δ/x) <= tol"""
    ratio = max_degree / x
    if ratio == 0:
        return 1
    # (K+1) log r <= log(tol (1-r) / n)
    needed = max(1, math.ceil(math.log(tol * (1 - ratio) / n) / math.log(ratio) - 1))
    while n * ratio ** (needed + 1) / (1 - ratio) > tol:
        needed += 1
    return needed


def _certified_series(g: Graph, x: float, tol: float, max_degree: int) -> SeriesEval:
    ratio = max_degree / x
    terms = certified_terms(g.n, max_degree, x, tol)
    adj = g.adjacency_matrix()
    # v_k = A^k 1 / x^k, kept scaled so nothing overflows
    vec = np.ones(g.n)
    partial = 0.0
    for _ in range(terms):
        vec = adj @ vec / x
        partial += float(vec.sum())
    tail = g.n * ratio ** (terms + 1) / (1 - ratio)
    return SeriesEval(x=x, terms=terms, partial_sum=partial, tail_bound=tail,
                      converged=tail <= tol, certified=True)


def _heuristic_series(g: Graph, x: float, tol: float, max_terms: int, window: int) -> SeriesEval:
    adj = g.adjacency_matrix()
    vec = np.ones(g.n)
    history = []
    partial = 0.0
    tail = math.inf
    for k in range(1, max_terms + 1):
        vec = adj @ vec / x
        term = float(vec.sum())
        partial += term
        history.append(term)
        if not math.isfinite(partial) or partial > 1e300:
            break
        if k < window + 2:
            continue
        # two-step ratios absorb the odd/even oscillation of bipartite graphs
        recent = history[-(window + 2):]
        ratios = [math.sqrt(recent[i + 2] / recent[i]) for i in range(window)]
        q = max(ratios)
        if q >= 1:
            if k >= 4 * window and min(ratios) >= 1:
                break
            continue
        tail = max(history[-1], history[-2]) * q / (1 - q)
        if tail <= tol:
            return SeriesEval(x=x, terms=k, partial_sum=partial, tail_bound=tail,
                              converged=True, certified=False)
    logger.debug("Walk series did not converge at x=%.6g after %d terms", x, len(history))
    return SeriesEval(x=x, terms=len(history), partial_sum=partial, tail_bound=tail,
                      converged=False, certified=False)


def walk_series(g: Graph, x: float, tol: Optional[float] = None) -> SeriesEval:
    """
    Evaluate sum_{k>=1} W^k(G)/x^k to within tol.

    Args:
        g: graph
        x: evaluation point, x > 0
        tol: bound on the neglected tail (defaults to config.SERIES_TOL)

    Returns:
        SeriesEval; `certified` is False in the x <= Δ(G) regime
    """
    tol = config.SERIES_TOL if tol is None else tol
    if not x > 0:
        raise InvalidGraphError(f"series point x must be positive, got {x}")
    if not tol > 0:
        raise InvalidGraphError(f"series tolerance must be positive, got {tol}")

    if g.edge_count == 0:
        return SeriesEval(x=x, terms=0, partial_sum=0.0, tail_bound=0.0,
                          converged=True, certified=True)

    max_degree = g.max_degree
    if x > max_degree:
        return _certified_series(g, x, tol, max_degree)
    return _heuristic_series(g, x, tol, config.SERIES_MAX_TERMS, config.SERIES_WINDOW)
