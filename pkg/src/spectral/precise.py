"""
Extended-precision enclosure of a spectral radius

Rayleigh quotient iteration in mpmath, started from the float Perron pair.
For symmetric A and a unit vector x, some eigenvalue lies within
||A x - q x||_2 of q = x^T A x. Starting next to the float radius, with the
Perron gap far wider than the float error, that eigenvalue is rho(G).
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

import mpmath

from ..graphs.core import Graph
from .solver import spectral_radius

logger = logging.getLogger(__name__)

MAX_STEPS = 12


@dataclass(frozen=True)
class PreciseRadius:
    """rho(G) lies in [value - radius, value + radius]"""

    value: mpmath.mpf
    radius: mpmath.mpf
    dps: int
    steps: int

    def lower(self) -> mpmath.mpf:
        return self.value - self.radius

    def upper(self) -> mpmath.mpf:
        return self.value + self.radius


def _matvec(neighbours: List[List[int]], x: List[mpmath.mpf]) -> List[mpmath.mpf]:
    return [mpmath.fsum(x[j] for j in row) for row in neighbours]


def _normalize(x: List[mpmath.mpf]) -> List[mpmath.mpf]:
    norm = mpmath.sqrt(mpmath.fsum(v * v for v in x))
    return [v / norm for v in x]


def _residual(neighbours: List[List[int]], x: List[mpmath.mpf], q: mpmath.mpf) -> mpmath.mpf:
    ax = _matvec(neighbours, x)
    return mpmath.sqrt(mpmath.fsum((a - q * v) ** 2 for a, v in zip(ax, x)))


def precise_radius(g: Graph, dps: int = 50, tol: Optional[float] = None) -> PreciseRadius:
    """
    Refine rho(g) to about dps decimal digits.

    Args:
        g: graph with at least one edge
        dps: working precision in decimal digits
        tol: tolerance of the float solve used as the starting pair

    Returns:
        PreciseRadius whose radius covers the residual bound plus the
        rounding level of the working precision
    """
    start = spectral_radius(g, tol)
    neighbours = [g.neighbors(u) for u in range(g.n)]

    with mpmath.workdps(dps):
        target = mpmath.mpf(10) ** (-(dps - 8))
        x = _normalize([mpmath.mpf(float(v)) for v in start.perron])
        q = mpmath.fdot(x, _matvec(neighbours, x))
        residual = _residual(neighbours, x, q)
        steps = 0
        adjacency = mpmath.matrix(g.adjacency_matrix().tolist())
        identity = mpmath.eye(g.n)
        offset = mpmath.mpf(10) ** (-(dps // 2))
        while residual > target * max(1, abs(q)) and steps < MAX_STEPS:
            steps += 1
            shift = q
            for _ in range(2):
                try:
                    y = mpmath.lu_solve(adjacency - shift * identity, mpmath.matrix(x))
                    break
                except ZeroDivisionError:
                    # q is an eigenvalue to working precision; plain inverse iteration from here
                    shift = q + offset * max(1, abs(q))
            else:
                break
            x = _normalize([y[i] for i in range(g.n)])
            q = mpmath.fdot(x, _matvec(neighbours, x))
            residual = _residual(neighbours, x, q)

        rounding = mpmath.mpf(10) ** (-(dps - 4)) * max(1, abs(q)) * max(1, g.n)
        result = PreciseRadius(value=+q, radius=residual + rounding, dps=dps, steps=steps)

    logger.debug("Refined rho=%.15g on n=%d at dps=%d in %d steps", float(result.value), g.n, dps, steps)
    return result
