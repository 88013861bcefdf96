"""
Certified comparison of spectral radii

An ordering is only reported when the difference clears ten times the
solver tolerance. Differences inside that band trigger one re-solve at
tol/100. A difference still inside the band goes to extended precision:
both radii are enclosed with mpmath at increasing working precision, and
disjoint enclosures give the ordering. Enclosures that never separate are
INCONCLUSIVE. EQUAL_WITHIN_TOL is reserved for identical inputs.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import mpmath

from ..config import config
from ..graphs.core import Graph
from .precise import precise_radius
from .solver import spectral_radius

logger = logging.getLogger(__name__)

ESCALATION_FACTOR = 100
BAND_FACTOR = 10


class Ordering(str, Enum):
    LESS = "LESS"
    GREATER = "GREATER"
    EQUAL_WITHIN_TOL = "EQUAL_WITHIN_TOL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class ComparisonVerdict:
    """Outcome of comparing rho(G1) against rho(G2)"""

    ordering: Ordering
    margin: float  # rho1 - rho2 at the final precision
    tol: float
    final_tol: float
    band: float
    rho1: float
    rho2: float
    precise_dps: Optional[int] = None

    @property
    def escalated(self) -> bool:
        return self.final_tol < self.tol

    def to_dict(self) -> dict:
        record = {
            "ordering": self.ordering.value,
            "margin": self.margin,
            "tol": self.tol,
            "final_tol": self.final_tol,
            "band": self.band,
            "rho1": self.rho1,
            "rho2": self.rho2,
        }
        if self.precise_dps is not None:
            record["precise_dps"] = self.precise_dps
        return record


def _band(tol: float, rho1: float, rho2: float) -> float:
    return BAND_FACTOR * tol * max(1.0, rho1, rho2)


def _strict(diff: float) -> Ordering:
    return Ordering.GREATER if diff > 0 else Ordering.LESS


def _precise_ordering(g1: Graph, g2: Graph, tol: float):
    """(ordering, margin, dps) from mpmath enclosures, doubling the precision"""
    dps = config.PRECISE_DPS
    margin = 0.0
    while dps <= config.PRECISE_MAX_DPS:
        with mpmath.workdps(dps):
            p1 = precise_radius(g1, dps, tol)
            p2 = precise_radius(g2, dps, tol)
            margin = float(p1.value - p2.value)
            if p1.lower() > p2.upper():
                return Ordering.GREATER, margin, dps
            if p1.upper() < p2.lower():
                return Ordering.LESS, margin, dps
        dps *= 2
    return Ordering.INCONCLUSIVE, margin, dps // 2


def compare_rho(g1: Graph, g2: Graph, tol: Optional[float] = None) -> ComparisonVerdict:
    """
    Compare rho(g1) with rho(g2).

    Returns:
        ComparisonVerdict whose ordering reads "rho(g1) <ordering> rho(g2)"
    """
    tol = config.SPECTRAL_TOL if tol is None else tol
    rho1 = spectral_radius(g1, tol).rho
    rho2 = spectral_radius(g2, tol).rho
    band = _band(tol, rho1, rho2)
    if g1 == g2:
        return ComparisonVerdict(Ordering.EQUAL_WITHIN_TOL, 0.0, tol, tol, band, rho1, rho1)

    diff = rho1 - rho2
    if abs(diff) > band:
        return ComparisonVerdict(_strict(diff), diff, tol, tol, band, rho1, rho2)

    fine_tol = tol / ESCALATION_FACTOR
    rho1 = spectral_radius(g1, fine_tol).rho
    rho2 = spectral_radius(g2, fine_tol).rho
    band = _band(fine_tol, rho1, rho2)
    diff = rho1 - rho2
    if abs(diff) > band:
        return ComparisonVerdict(_strict(diff), diff, tol, fine_tol, band, rho1, rho2)

    ordering, margin, dps = _precise_ordering(g1, g2, fine_tol)
    if ordering is Ordering.INCONCLUSIVE:
        logger.info("Spectral radii %.15g and %.15g not separable at %d digits", rho1, rho2, dps)
    return ComparisonVerdict(ordering, margin, tol, fine_tol, band, rho1, rho2, precise_dps=dps)
