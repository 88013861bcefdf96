"""Spectral radius, certified comparisons and rewiring gains"""
from .compare import ComparisonVerdict, Ordering, compare_rho
from .precise import PreciseRadius, precise_radius
from .rewire import apply_edits, detach_and_attach, rewire_gain, validate_edits
from .solver import SpectralResult, cache_stats, clear_cache, rho, spectral_radius

__all__ = [
    "ComparisonVerdict",
    "Ordering",
    "compare_rho",
    "PreciseRadius",
    "precise_radius",
    "apply_edits",
    "detach_and_attach",
    "rewire_gain",
    "validate_edits",
    "SpectralResult",
    "cache_stats",
    "clear_cache",
    "rho",
    "spectral_radius",
]
