"""
The multipartite series equation

For G = K_{n_1,...,n_r} with H_s embedded in part s, rho(G) is the largest
root of

    f(x) = sum_s 1 / (1 + n_s/x + S_s(x)/x) = r - 1,
    S_s(x) = sum_{i>=1} W^i(H_s) / x^i,

and f is strictly increasing in x wherever every S_s converges. The root
is bracketed between max_s Δ(H_s) (plus a margin) and n - 1, then bisected
on certified intervals of f.
"""
import logging
import math
import time
from dataclasses import dataclass
from typing import Optional, Tuple

from ..config import config
from ..lib.errors import BracketError, SeriesDivergenceError
from ..walks.series import SeriesEval, walk_series
from .spec import MultipartiteSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FixedPointEval:
    """
    f(x) as a certified interval [lower, value]: `value` uses the truncated
    series, `lower` adds each part's tail bound.
    """

    x: float
    value: float
    lower: float
    parts: Tuple[SeriesEval, ...]

    @property
    def upper(self) -> float:
        return self.value

    @property
    def width(self) -> float:
        return self.value - self.lower

    @property
    def certified(self) -> bool:
        return all(part.certified for part in self.parts)


def _term(size: int, series_sum: float, x: float) -> float:
    return 1.0 / (1.0 + (size + series_sum) / x)


def f_eval(spec: MultipartiteSpec, x: float, tol: Optional[float] = None) -> FixedPointEval:
    """
    Evaluate f at x with an enclosure narrower than tol.

    Raises:
        SeriesDivergenceError: some part's walk series does not converge at x
    """
    tol = config.SERIES_TOL if tol is None else tol
    # each term moves by at most tail/x, so a tail below tol*x/(10r) per part suffices
    part_tol = tol * x / (10 * spec.r)
    value = lower = 0.0
    evals = []
    for s, part in enumerate(spec.parts):
        series = walk_series(part.graph, x, part_tol)
        if not series.converged:
            raise SeriesDivergenceError(
                f"walk series of part {s} does not converge at x={x:.12g} "
                f"(Δ={part.max_degree}, {series.terms} terms)"
            )
        value += _term(part.size, series.partial_sum, x)
        lower += _term(part.size, series.partial_sum + series.tail_bound, x)
        evals.append(series)
    return FixedPointEval(x=x, value=value, lower=lower, parts=tuple(evals))


def _cheap_upper(spec: MultipartiteSpec, x: float) -> float:
    """f(x) with every series dropped; an upper bound on f"""
    return sum(_term(part.size, 0.0, x) for part in spec.parts)


@dataclass(frozen=True)
class SeriesRoot:
    """Bisection result for f(x) = r - 1"""

    root: float
    lo: float
    hi: float
    bisections: int
    series_evals: int
    method: str  # series / eigensolve-fallback
    elapsed_s: float

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def to_dict(self) -> dict:
        return {
            "root": self.root,
            "lo": self.lo,
            "hi": self.hi,
            "bisections": self.bisections,
            "series_evals": self.series_evals,
            "method": self.method,
        }


def _fallback(spec: MultipartiteSpec, reason: str, started: float) -> SeriesRoot:
    from ..spectral.solver import spectral_radius

    logger.warning("Series bracket failed (%s); falling back to direct eigensolve", reason)
    value = spectral_radius(spec.realize()).rho
    return SeriesRoot(root=value, lo=value, hi=value, bisections=0, series_evals=0,
                      method="eigensolve-fallback", elapsed_s=time.perf_counter() - started)


def solve_series_root(
    spec: MultipartiteSpec,
    tol: Optional[float] = None,
    fallback: bool = False,
) -> SeriesRoot:
    """
    Bisect f(x) = r - 1 on [max_s Δ(H_s) + eps, n - 1] down to width tol.

    Args:
        spec: multipartite spec
        tol: final bracket width (defaults to config.SPECTRAL_TOL)
        fallback: use a direct eigensolve instead of raising when the bracket fails

    Raises:
        BracketError: f(lo) >= r - 1 or the bracket is empty, and fallback is off
    """
    tol = config.SPECTRAL_TOL if tol is None else tol
    started = time.perf_counter()
    target = spec.r - 1
    delta = spec.max_embedded_degree
    eps = config.SERIES_BRACKET_EPS
    lo = delta + max(eps, eps * delta)
    hi = float(spec.n - 1)

    if hi <= lo:
        reason = f"empty bracket [{lo:.6g}, {hi:.6g}]"
        if fallback:
            return _fallback(spec, reason, started)
        raise BracketError(reason)

    f_tol = tol / max(1.0, hi)
    evals = 0
    if _cheap_upper(spec, lo) >= target:
        low_eval = f_eval(spec, lo, f_tol)
        evals += 1
        if low_eval.upper >= target:
            reason = f"f({lo:.6g}) = {low_eval.upper:.12g} >= {target}"
            if fallback:
                return _fallback(spec, reason, started)
            raise BracketError(reason)

    bisections = 0
    refined = False
    while hi - lo > tol and bisections < config.SERIES_MAX_BISECTIONS:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        bisections += 1
        if _cheap_upper(spec, mid) < target:
            lo = mid
            continue
        at_mid = f_eval(spec, mid, f_tol)
        evals += 1
        if at_mid.upper < target:
            lo = mid
        elif at_mid.lower >= target:
            hi = mid
        elif not refined:
            # enclosure straddles the target; tighten once and retry this midpoint
            refined = True
            f_tol /= 1000
            bisections -= 1
        else:
            lo = hi = mid
            break

    root = 0.5 * (lo + hi)
    logger.debug("Series root %.15g in [%.15g, %.15g] after %d bisections, %d evaluations",
                 root, lo, hi, bisections, evals)
    return SeriesRoot(root=root, lo=lo, hi=hi, bisections=bisections, series_evals=evals,
                      method="series", elapsed_s=time.perf_counter() - started)


def solve_rho_by_series(
    spec: MultipartiteSpec,
    tol: Optional[float] = None,
    fallback: bool = False,
) -> float:
    """rho of the realized graph as the largest root of f(x) = r - 1"""
    return solve_series_root(spec, tol, fallback).root


def f_limit_gap(spec: MultipartiteSpec, x: float) -> float:
    """|f(x) - r|, which tends to 0 as x grows"""
    return math.fabs(f_eval(spec, x).value - spec.r)
