"""
Parameter sweeps over the lemma checks

Every sweep builds its full list of instances up front (seeded where
sampled), fans them out through the worker pool and returns reports in
instance order, so the same arguments always give the same report list.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config import config
from ..workers.pool import run_ordered
from .gfun import check_gfun
from .reports import LemmaReport
from .spectral_lemmas import (
    LEMMA2_MIN_SIZE,
    LEMMA3_MIN_SIZE,
    explore_below_threshold,
    verify_lemma1,
    verify_lemma2,
    verify_lemma3,
)
from .walk_lemmas import check_wdiff, check_weval, fact1_report, weval_grid

logger = logging.getLogger(__name__)

DEFAULT_H = ("K1", "K2", "P3")
LEMMA1_H = ("K1", "K2")
LEMMA1_T = ("P0", "E5", "P5")

Instance = Tuple[Tuple[int, ...], str, str]


# ==================== Worker entry points ====================

def _run_wdiff(args) -> LemmaReport:
    return check_wdiff(*args)


def _run_weval(args) -> LemmaReport:
    n, dist, grid = args
    return check_weval(n, dist, grid)


def _run_lemma1(args) -> LemmaReport:
    n1, n2, h, t, tol = args
    return verify_lemma1(n1, n2, h, t, tol)


def _run_lemma2(args) -> LemmaReport:
    paths, h, t, tol = args
    return verify_lemma2(paths, h, t, tol)


def _run_lemma3(args) -> LemmaReport:
    paths, h, t, tol = args
    return verify_lemma3(paths, h, t, tol)


def _run_below(args) -> LemmaReport:
    lemma, paths, h, t, tol = args
    return explore_below_threshold(lemma, paths, h, t, tol)


# ==================== Exact suites ====================

def fact1_sweep(ell_max: int = 15, n_max: int = 60) -> List[LemmaReport]:
    return [fact1_report(ell_max, n_max)]


def wdiff_sweep(n1_max: int = 12, max_length: int = 12, jobs: Optional[int] = None) -> List[LemmaReport]:
    """Every 3 <= n1 <= n1_max, 0 <= n2 <= n1 - 2"""
    items = [(n1, n2, max_length) for n1 in range(3, n1_max + 1) for n2 in range(0, n1 - 1)]
    return run_ordered(_run_wdiff, items, jobs)


def weval_sweep(
    orders: Sequence[int] = (10, 25, 40),
    points: int = 20,
    x_max: float = 50.0,
    jobs: Optional[int] = None,
) -> List[LemmaReport]:
    """Every distance 2 <= d <= n-1 on each path order, over a shared grid per order"""
    items = []
    for n in orders:
        grid = weval_grid(n, points, x_max)
        items.extend((n, dist, grid) for dist in range(2, n))
    return run_ordered(_run_weval, items, jobs)


def gfun_sweep() -> List[LemmaReport]:
    return [check_gfun("lemma2"), check_gfun("lemma3")]


# ==================== Spectral suites ====================

def lemma1_sweep(
    n1_max: int = 20,
    hs: Sequence[str] = LEMMA1_H,
    ts: Sequence[str] = LEMMA1_T,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
) -> List[LemmaReport]:
    """All n2 + 2 <= n1 <= n1_max with n2 >= 1, crossed with every H and T"""
    items = [
        (n1, n2, h, t, tol)
        for h in hs
        for t in ts
        for n1 in range(3, n1_max + 1)
        for n2 in range(1, n1 - 1)
    ]
    return run_ordered(_run_lemma1, items, jobs)


def _sample_t(rng: np.random.Generator, m: int) -> str:
    """T of order m: empty, a single path, or several equal paths plus isolated vertices"""
    kind = int(rng.integers(0, 3))
    if kind == 0 or m < 4:
        return f"E{m}"
    if kind == 1:
        return f"P{m}"
    k = int(rng.integers(2, 6))
    j, r = divmod(m, k)
    return f"{k}P{j}" + (f"+E{r}" if r else "")


def _sample_lemma2_paths(rng: np.random.Generator) -> Tuple[int, ...]:
    n4 = int(rng.integers(1, 4))
    n3 = n4 + int(rng.integers(0, 3))
    n2 = n3 + int(rng.integers(0, 4))
    n1 = n2 + 2 + int(rng.integers(0, 8))
    return n1, n2, n3, n4


def _sample_lemma3_paths(rng: np.random.Generator) -> Tuple[int, ...]:
    n5 = int(rng.integers(1, 4))
    n4 = n5 + int(rng.integers(0, 3))
    n3 = n4 + int(rng.integers(0, 3))
    n2 = n3 + int(rng.integers(0, 4))
    n1 = n2 + 3 + int(rng.integers(0, 8))
    return n1, n2, n3, n4, n5


def sample_instances(
    lemma: str,
    count: int,
    seed: Optional[int] = None,
    size: Optional[int] = None,
    hs: Sequence[str] = DEFAULT_H,
) -> List[Instance]:
    """
    Seeded (paths, H name, T name) instances with |T| + sum(paths) == size
    (defaults to the lemma's threshold).
    """
    rng = np.random.default_rng(config.SEED if seed is None else seed)
    if lemma == "lemma2":
        sampler, size = _sample_lemma2_paths, LEMMA2_MIN_SIZE if size is None else size
    elif lemma == "lemma3":
        sampler, size = _sample_lemma3_paths, LEMMA3_MIN_SIZE if size is None else size
    else:
        raise ValueError(f"no sampler for {lemma!r}")

    instances = []
    while len(instances) < count:
        paths = sampler(rng)
        h = hs[int(rng.integers(0, len(hs)))]
        m = size - sum(paths)
        if m < 0:
            continue
        instances.append((paths, h, _sample_t(rng, m)))
    return instances


def lemma2_threshold_sweep(
    count: int = 50,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
) -> List[LemmaReport]:
    items = [(paths, h, t, tol) for paths, h, t in sample_instances("lemma2", count, seed)]
    return run_ordered(_run_lemma2, items, jobs)


def lemma3_threshold_sweep(
    count: int = 25,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
) -> List[LemmaReport]:
    items = [(paths, h, t, tol) for paths, h, t in sample_instances("lemma3", count, seed)]
    return run_ordered(_run_lemma3, items, jobs)


def below_threshold_sweep(
    lemma: str,
    count: int = 20,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
) -> List[LemmaReport]:
    """Descriptive runs with sizes drawn uniformly below the lemma's threshold"""
    threshold = LEMMA2_MIN_SIZE if lemma == "lemma2" else LEMMA3_MIN_SIZE
    rng = np.random.default_rng(config.SEED if seed is None else seed)
    items = []
    for _ in range(count):
        size = int(rng.integers(threshold // 4, threshold))
        sub_seed = int(rng.integers(0, 2 ** 31))
        instance = sample_instances(lemma, 1, seed=sub_seed, size=size)
        paths, h, t = instance[0]
        items.append((lemma, paths, h, t, tol))
    logger.info("Exploring %d %s instances below size %d", len(items), lemma, threshold)
    return run_ordered(_run_below, items, jobs)
