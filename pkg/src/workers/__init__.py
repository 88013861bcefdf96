"""
Workers module for parallel sweeps
Deterministic, input-ordered process-pool fan-out
"""
from .pool import resolve_jobs, run_ordered

__all__ = [
    'resolve_jobs',
    'run_ordered',
]
