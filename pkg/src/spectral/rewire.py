"""
Edge edits and their Rayleigh-quotient gain

For any non-negative x,  rho(G') - rho(G) >= x^T (A(G') - A(G)) x / x^T x,
with the right-hand side computed here as
    2 (sum_{uv added} x_u x_v - sum_{uv removed} x_u x_v) / sum_u x_u^2.
Removals are applied before additions, so removing and re-adding an edge
is a valid no-op edit.
"""
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..lib.errors import InvalidGraphError
from ..graphs.core import Edge, Graph


def _normalize(g: Graph, edges: Iterable[Edge], kind: str) -> List[Edge]:
    result = []
    seen = set()
    for u, v in edges:
        g.check_vertex(u)
        g.check_vertex(v)
        if u == v:
            raise InvalidGraphError(f"{kind} edge ({u}, {v}) is a self-loop")
        edge = (min(int(u), int(v)), max(int(u), int(v)))
        if edge in seen:
            raise InvalidGraphError(f"{kind} edge {edge} listed twice")
        seen.add(edge)
        result.append(edge)
    return result


def validate_edits(
    g: Graph,
    removed: Iterable[Edge],
    added: Iterable[Edge],
) -> Tuple[List[Edge], List[Edge]]:
    """Normalize edit lists to (u, v) with u < v and check they keep g simple"""
    removed = _normalize(g, removed, "removed")
    added = _normalize(g, added, "added")
    for u, v in removed:
        if not g.adjacency[u, v]:
            raise InvalidGraphError(f"cannot remove missing edge ({u}, {v})")
    removed_set = set(removed)
    for u, v in added:
        if g.adjacency[u, v] and (u, v) not in removed_set:
            raise InvalidGraphError(f"cannot add existing edge ({u}, {v})")
    return removed, added


def apply_edits(g: Graph, removed: Iterable[Edge], added: Iterable[Edge]) -> Graph:
    """The graph obtained by deleting `removed` and then inserting `added`"""
    removed, added = validate_edits(g, removed, added)
    adj = np.array(g.adjacency)
    for u, v in removed:
        adj[u, v] = adj[v, u] = False
    for u, v in added:
        adj[u, v] = adj[v, u] = True
    return Graph(adj, g.labels)


def rewire_gain(
    g: Graph,
    removed: Iterable[Edge],
    added: Iterable[Edge],
    x: Sequence[float],
) -> float:
    """
    Rayleigh lower bound on rho(G') - rho(G) for the edited graph G'.

    Args:
        g: graph before the edit
        removed: edges deleted from g
        added: edges inserted after the deletions
        x: non-negative test vector of length n, usually the Perron vector of g
    """
    removed, added = validate_edits(g, removed, added)
    vec = np.asarray(x, dtype=np.float64)
    if vec.shape != (g.n,):
        raise InvalidGraphError(f"test vector has shape {vec.shape}, expected ({g.n},)")
    if (vec < 0).any():
        raise InvalidGraphError("test vector must be non-negative")
    norm = float(vec @ vec)
    if norm == 0:
        raise InvalidGraphError("test vector must be non-zero")
    gained = sum(vec[u] * vec[v] for u, v in added)
    lost = sum(vec[u] * vec[v] for u, v in removed)
    return float(2 * (gained - lost) / norm)


def detach_and_attach(g: Graph, u: int, target: int) -> Tuple[List[Edge], List[Edge]]:
    """
    Edits that delete every edge at u and then join u to target alone.
    With Perron vector x the gain is 2 (x_target - sum_{v ~ u} x_v) x_u / |x|^2.
    """
    g.check_vertex(u)
    g.check_vertex(target)
    if u == target:
        raise InvalidGraphError(f"cannot attach vertex {u} to itself")
    removed = [(min(u, v), max(u, v)) for v in g.neighbors(u)]
    added = [(min(u, target), max(u, target))]
    return removed, added
