"""
Exact walk counting

All counts are Python integers (arbitrary precision): the adjacency matrix
is lifted to an object array and iterated against the all-ones vector, so
W^l(G) = 1^T A^l 1 never touches floating point.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from ..lib.errors import InvalidGraphError
from ..graphs.core import Graph


def _object_adjacency(g: Graph) -> np.ndarray:
    return g.adjacency.astype(np.int64).astype(object)


def _check_length(ell: int) -> None:
    if ell < 1:
        raise InvalidGraphError(f"walk length must be at least 1, got {ell}")


def walk_vectors(g: Graph, max_length: int) -> List[np.ndarray]:
    """[A^1 1, ..., A^L 1] as object arrays; entry u of A^l 1 is w^l_G(u)"""
    if max_length < 0:
        raise InvalidGraphError(f"walk length must be non-negative, got {max_length}")
    adj = _object_adjacency(g)
    vec = np.ones(g.n, dtype=object)
    result = []
    for _ in range(max_length):
        vec = adj.dot(vec) if g.n else vec
        result.append(vec)
    return result


def walk_counts(g: Graph, max_length: int) -> List[int]:
    """[W^1(G), ..., W^L(G)]"""
    return [int(sum(vec)) for vec in walk_vectors(g, max_length)]


def walk_count_total(g: Graph, ell: int) -> int:
    """W^ell(G), the number of walks of length ell"""
    _check_length(ell)
    return walk_counts(g, ell)[-1]


def walk_count_from(g: Graph, u: int, ell: int) -> int:
    """w^ell_G(u), the number of walks of length ell starting at u"""
    g.check_vertex(u)
    _check_length(ell)
    return int(walk_vectors(g, ell)[-1][u])


def crossing_counts(g: Graph, u: int, v: int, max_length: int) -> List[int]:
    """
    [W^1_{u,v}(G), ..., W^L_{u,v}(G)]: walks visiting both u and v, by
    inclusion-exclusion over the induced subgraphs G, G-u, G-v, G-u-v.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise InvalidGraphError(f"crossing walks need two distinct vertices, got {u} twice")
    full = walk_counts(g, max_length)
    minus_u = walk_counts(g.delete_vertices([u]), max_length)
    minus_v = walk_counts(g.delete_vertices([v]), max_length)
    minus_uv = walk_counts(g.delete_vertices([u, v]), max_length)
    return [a - b - c + d for a, b, c, d in zip(full, minus_u, minus_v, minus_uv)]


def walk_count_crossing(g: Graph, u: int, v: int, ell: int) -> int:
    """W^ell_{u,v}(G); zero whenever ell < d_G(u, v)"""
    _check_length(ell)
    return crossing_counts(g, u, v, ell)[-1]


@dataclass
class WalkTable:
    """Exact walk counts of one graph for lengths 1..L"""

    graph_key: str
    totals: Dict[int, int]
    per_vertex: Optional[Dict[int, List[int]]] = field(default=None)

    @property
    def max_length(self) -> int:
        return max(self.totals, default=0)

    def to_dict(self) -> Dict:
        return {
            "graph_key": self.graph_key,
            "totals": {str(k): v for k, v in self.totals.items()},
            "per_vertex": None if self.per_vertex is None
            else {str(k): v for k, v in self.per_vertex.items()},
        }


def walk_table(g: Graph, max_length: int, per_vertex: bool = False) -> WalkTable:
    """Tabulate W^l(G) (and optionally w^l_G(u)) for l = 1..max_length"""
    vectors = walk_vectors(g, max_length)
    totals = {ell: int(sum(vec)) for ell, vec in enumerate(vectors, start=1)}
    starts = None
    if per_vertex:
        starts = {ell: [int(x) for x in vec] for ell, vec in enumerate(vectors, start=1)}
    return WalkTable(graph_key=g.key().hex(), totals=totals, per_vertex=starts)
