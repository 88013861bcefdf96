"""Multipartite series equation for spectral radii of joins"""
from .fixed_point import (
    FixedPointEval,
    SeriesRoot,
    f_eval,
    f_limit_gap,
    solve_rho_by_series,
    solve_series_root,
)
from .spec import MultipartiteSpec, Part

__all__ = [
    "FixedPointEval",
    "SeriesRoot",
    "f_eval",
    "f_limit_gap",
    "solve_rho_by_series",
    "solve_series_root",
    "MultipartiteSpec",
    "Part",
]
