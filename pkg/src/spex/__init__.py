"""Spectral extremal search over C_ell-free planar graphs"""
from .enumeration import (
    EnumerationStats,
    enumerate_planar_cl_free,
    forest_partitions,
    restricted_partitions,
    stanley_bound,
)
from .search import (
    LeaderboardEntry,
    SearchFamily,
    SpexReport,
    SpexStatus,
    TheoremStatus,
    brute_force_spex,
    restricted_spex,
    theorem_check,
)

__all__ = [
    "EnumerationStats",
    "enumerate_planar_cl_free",
    "forest_partitions",
    "restricted_partitions",
    "stanley_bound",
    "LeaderboardEntry",
    "SearchFamily",
    "SpexReport",
    "SpexStatus",
    "TheoremStatus",
    "brute_force_spex",
    "restricted_spex",
    "theorem_check",
]
