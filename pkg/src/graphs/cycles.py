"""
Exact-length cycle detection

Depth-first extension of simple paths from each start vertex s, using only
vertices larger than s (so s is the cycle's minimum), pruned by the BFS
distance back to s inside that vertex range.
"""
import logging

import numpy as np

from ..config import config
from ..lib.errors import HypothesisError
from .constructions import PathPartition
from .core import Graph

logger = logging.getLogger(__name__)


def _distances_to(adj: np.ndarray, start: int, allowed: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    dist = np.full(n, n + 1, dtype=np.int64)
    dist[start] = 0
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for v in np.flatnonzero(adj[u] & allowed):
                if dist[v] > dist[u] + 1:
                    dist[v] = dist[u] + 1
                    nxt.append(int(v))
        frontier = nxt
    return dist


def has_cycle_of_length(g: Graph, ell: int) -> bool:
    """True iff g contains a simple cycle on exactly ell vertices"""
    if ell < 3:
        raise HypothesisError(f"cycle length must be at least 3, got {ell}")
    if ell > g.n or g.edge_count < ell:
        return False
    if g.n > config.CYCLE_SEARCH_MAX_N:
        logger.warning("Exact-length cycle search on n=%d exceeds the intended cap %d",
                       g.n, config.CYCLE_SEARCH_MAX_N)

    adj = g.adjacency
    neighbours = [np.flatnonzero(adj[u]).tolist() for u in range(g.n)]

    for s in range(g.n - ell + 1):
        allowed = np.zeros(g.n, dtype=bool)
        allowed[s:] = True
        dist = _distances_to(adj, s, allowed)
        on_path = np.zeros(g.n, dtype=bool)
        on_path[s] = True

        def extend(u: int, length: int) -> bool:
            # `length` vertices on the path, u is the last one
            if length == ell:
                return bool(adj[u, s])
            for v in neighbours[u]:
                if v <= s or on_path[v]:
                    continue
                # after v the path has length+1 vertices; ell-length-1 more, then close
                if dist[v] > ell - length:
                    continue
                on_path[v] = True
                if extend(v, length + 1):
                    return True
                on_path[v] = False
            return False

        for first in neighbours[s]:
            if first <= s:
                continue
            on_path[first] = True
            found = extend(first, 2)
            on_path[first] = False
            if found:
                return True
    return False


def forest_join_cl_free(partition: PathPartition, ell: int) -> bool:
    """
    Whether K_2 ∨ (linear forest) is C_ell-free, by the closed form
    n_1 + n_2 <= ell - 3 on the two longest paths.
    """
    if ell < 5:
        raise HypothesisError(f"ell must be at least 5, got {ell}")
    return partition.top_two <= ell - 3
