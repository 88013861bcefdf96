"""
Candidate generation for the extremal searches

Restricted family: K_2 ∨ (linear forest) on n vertices, one candidate per
partition of n - 2 whose two largest parts sum to at most ell - 3.

Internal family: every labeled planar C_ell-free graph on n vertices whose
degree sequence is non-increasing in vertex order. Every graph has such a
labeling, so the maximum of rho over this set is the maximum over the whole
family. Vertex rows are decided one at a time; once row i is placed the
degree of vertex i is final, which is where the ordering is enforced.
Planarity and C_ell-freeness are closed under deleting edges, so a partial
graph that fails either one is cut with its whole subtree.
"""
import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..config import config
from ..lib.errors import HypothesisError, ScopeExceededError
from ..graphs.constructions import PathPartition
from ..graphs.core import Graph
from ..graphs.cycles import has_cycle_of_length
from ..graphs.planarity import is_planar

logger = logging.getLogger(__name__)

# every graph with at most 8 edges is planar: K_{3,3} has 9 and K_5 has 10
_ALWAYS_PLANAR_EDGES = 8


def stanley_bound(edges: int) -> float:
    """rho(G) <= (-1 + sqrt(1 + 8e)) / 2 for any graph with e edges"""
    return (-1 + math.sqrt(1 + 8 * edges)) / 2


def check_search_params(n: int, ell: int, cap: int) -> None:
    if ell < 5:
        raise HypothesisError(f"ell must be at least 5, got {ell}")
    if ell > n:
        raise HypothesisError(f"ell={ell} exceeds order n={n}")
    if n > cap:
        raise ScopeExceededError(f"order {n} exceeds the search cap {cap}")


# ==================== Restricted family ====================

def _partitions(total: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def forest_partitions(total: int, top_two_cap: int) -> Iterator[PathPartition]:
    """Partitions of `total` into positive parts with n_1 + n_2 <= top_two_cap"""
    for first in range(min(total, top_two_cap), 0, -1):
        remainder = total - first
        second_cap = min(first, top_two_cap - first)
        if remainder and second_cap < 1:
            continue
        for rest in _partitions(remainder, second_cap):
            yield PathPartition((first,) + rest)


def colex_key(partition: PathPartition) -> Tuple[int, ...]:
    return tuple(reversed(partition.parts))


def restricted_partitions(n: int, ell: int) -> List[PathPartition]:
    """All forests for K_2 ∨ forest on n vertices that avoid C_ell, in colex order"""
    check_search_params(n, ell, config.RESTRICTED_MAX_N)
    return sorted(forest_partitions(n - 2, ell - 3), key=colex_key)


# ==================== Internal exhaustive family ====================

@dataclass
class EnumerationStats:
    nodes: int = 0
    pruned_degree: int = 0
    pruned_planarity: int = 0
    pruned_cycle: int = 0
    leaves: int = 0

    @property
    def pruned(self) -> int:
        return self.pruned_degree + self.pruned_planarity + self.pruned_cycle


def _hereditary_ok(adj: np.ndarray, edges: int, ell: int, stats: EnumerationStats) -> bool:
    if edges > 3 * adj.shape[0] - 6 and adj.shape[0] >= 3:
        stats.pruned_planarity += 1
        return False
    if edges < ell and edges <= _ALWAYS_PLANAR_EDGES:
        return True
    g = Graph(adj)
    if edges >= ell and has_cycle_of_length(g, ell):
        stats.pruned_cycle += 1
        return False
    if edges > _ALWAYS_PLANAR_EDGES and not is_planar(g):
        stats.pruned_planarity += 1
        return False
    return True


def enumerate_planar_cl_free(n: int, ell: int, stats: Optional[EnumerationStats] = None) -> Iterator[Graph]:
    """
    Yield every labeled planar C_ell-free graph on n vertices with
    deg(0) >= deg(1) >= ... >= deg(n-1).
    """
    check_search_params(n, ell, config.BRUTE_FORCE_MAX_N)
    stats = stats if stats is not None else EnumerationStats()
    adj = np.zeros((n, n), dtype=bool)
    degrees = [0] * n

    def place(i: int, edges: int) -> Iterator[Graph]:
        if i == n:
            stats.leaves += 1
            yield Graph(adj)
            return
        later = list(range(i + 1, n))
        # larger rows first, so dense candidates come out early
        for size in range(len(later), -1, -1):
            for row in combinations(later, size):
                stats.nodes += 1
                final = degrees[i] + size
                if i > 0 and final > degrees[i - 1]:
                    stats.pruned_degree += 1
                    continue
                if any(degrees[j] + 1 > final for j in row) or any(
                    degrees[j] > final for j in later
                ):
                    stats.pruned_degree += 1
                    continue
                for j in row:
                    adj[i, j] = adj[j, i] = True
                    degrees[j] += 1
                degrees[i] = final
                if size == 0 or _hereditary_ok(adj, edges + size, ell, stats):
                    yield from place(i + 1, edges + size)
                for j in row:
                    adj[i, j] = adj[j, i] = False
                    degrees[j] -= 1
                degrees[i] = final - size

    yield from place(0, 0)
    logger.debug("Enumerated n=%d ell=%d: %d leaves, %d nodes, %d pruned",
                 n, ell, stats.leaves, stats.nodes, stats.pruned)
