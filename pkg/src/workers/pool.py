"""
Ordered fan-out over parameter tuples

Sweeps hand a top-level function and a list of picklable items to
`run_ordered`; results always come back in input order so reports are
byte-identical regardless of the worker count.
"""
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from ..config import config

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_jobs(jobs: Optional[int] = None) -> int:
    """Explicit value, else config.JOBS; 0 means one worker per CPU"""
    value = config.JOBS if jobs is None else jobs
    if value <= 0:
        value = os.cpu_count() or 1
    return value


def run_ordered(fn: Callable[[T], R], items: Sequence[T], jobs: Optional[int] = None) -> List[R]:
    """
    Apply fn to every item, in a process pool when jobs > 1.

    Args:
        fn: picklable (module-level) function
        items: work items, also picklable
        jobs: worker count (defaults to config.JOBS)

    Returns:
        [fn(item) for item in items], in the same order
    """
    items = list(items)
    workers = min(resolve_jobs(jobs), len(items))
    if workers <= 1:
        return [fn(item) for item in items]

    chunksize = max(1, len(items) // (4 * workers))
    logger.debug("Fanning out %d items over %d workers (chunksize %d)", len(items), workers, chunksize)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items, chunksize=chunksize))
