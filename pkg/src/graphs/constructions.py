"""
Graph constructions: paths, unions, joins, linear forests and the
extremal C_l-free planar families.

Vertex order convention for joins: the left operand (hub) first, then the
right operand; a realized linear forest lays its paths out in partition
order with consecutive vertices along each path. This keeps graph6 output
and test fixtures stable.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..lib.errors import HypothesisError, InvalidGraphError
from .core import Graph

logger = logging.getLogger(__name__)


# ==================== Elementary graphs ====================

def empty_graph(n: int, role: Optional[str] = None) -> Graph:
    """K̄_n: n isolated vertices"""
    if n < 0:
        raise InvalidGraphError(f"vertex count must be non-negative, got {n}")
    labels = None if role is None else [f"{role} {i}" for i in range(n)]
    return Graph(np.zeros((n, n), dtype=bool), labels)


def complete_graph(n: int, role: Optional[str] = None) -> Graph:
    if n < 0:
        raise InvalidGraphError(f"vertex count must be non-negative, got {n}")
    adj = ~np.eye(n, dtype=bool)
    labels = None if role is None else [f"{role} {i}" for i in range(n)]
    return Graph(adj, labels)


def build_path(k: int) -> Graph:
    """P_k with vertices u_1..u_k stored as 0..k-1; P_0 is the empty graph"""
    if k < 0:
        raise InvalidGraphError(f"path order must be non-negative, got {k}")
    return Graph.from_edges(
        k,
        ((i, i + 1) for i in range(k - 1)),
        labels=[f"position {i}" for i in range(k)],
    )


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Vertex-disjoint union, operands laid out consecutively"""
    n = sum(g.n for g in graphs)
    adj = np.zeros((n, n), dtype=bool)
    labels: List[Optional[str]] = []
    offset = 0
    for g in graphs:
        adj[offset:offset + g.n, offset:offset + g.n] = g.adjacency
        labels.extend(g.labels if g.labels is not None else [None] * g.n)
        offset += g.n
    return Graph(adj, labels)


def join(g1: Graph, g2: Graph) -> Graph:
    """G1 ∨ G2: disjoint union plus every edge between the two vertex sets"""
    union = disjoint_union([g1, g2])
    adj = np.array(union.adjacency)
    adj[:g1.n, g1.n:] = True
    adj[g1.n:, :g1.n] = True
    return Graph(adj, union.labels)


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} = K̄_s ∨ K̄_t"""
    return join(empty_graph(s, "side-a"), empty_graph(t, "side-b"))


def star(m: int) -> Graph:
    """K_1 ∨ K̄_m"""
    return join(empty_graph(1, "hub"), empty_graph(m, "leaf"))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """K_{n_1,...,n_r}"""
    result = empty_graph(0)
    for i, size in enumerate(sizes):
        result = join(result, empty_graph(size, f"part {i}"))
    return result


# ==================== Linear forests ====================

@dataclass(frozen=True)
class PathPartition:
    """
    Path orders n_1 >= n_2 >= ... >= n_t >= 0 of a linear forest.
    Zeros stand for P_0 and contribute no vertices.
    """

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise InvalidGraphError(f"path orders must be non-negative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidGraphError(f"path orders must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[int]) -> "PathPartition":
        """Sort arbitrary path orders into a partition"""
        return cls(tuple(sorted((int(p) for p in parts), reverse=True)))

    @property
    def order(self) -> int:
        return sum(self.parts)

    def padded(self, length: int = 2) -> "PathPartition":
        """Append P_0 parts until there are at least `length` of them"""
        missing = max(0, length - len(self.parts))
        return PathPartition(self.parts + (0,) * missing)

    def nonzero(self) -> "PathPartition":
        return PathPartition(tuple(p for p in self.parts if p > 0))

    @property
    def top_two(self) -> int:
        """n_1 + n_2, with missing parts read as P_0"""
        padded = self.padded(2).parts
        return padded[0] + padded[1]

    def realize(self) -> Graph:
        """The linear forest P_{n_1} ∪ ... ∪ P_{n_t}"""
        paths = []
        for i, k in enumerate(self.parts):
            path = build_path(k)
            paths.append(path.with_labels([f"path {i}, position {j}" for j in range(k)]))
        return disjoint_union(paths)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def forest_join(hub: Graph, partition: PathPartition, extra: Optional[Graph] = None) -> Graph:
    """hub ∨ (forest ∪ extra) with the hub first, then forest, then extra"""
    right = partition.realize()
    if extra is not None:
        right = disjoint_union([right, extra])
    return join(hub, right)


# ==================== Extremal families ====================

class ExtremalCase(str, Enum):
    I = "I"
    II = "II"


@dataclass(frozen=True)
class ExtremalParams:
    """
    Parameters of the extremal C_l-free planar graph of order n.

    Case I (l < (2n+5)/3): n - l + 1 = a * floor((l-3)/2) + b, 0 <= b < floor((l-3)/2).
    Case II: a and b are unused and stored as 0.
    """

    n: int
    ell: int
    case: ExtremalCase = field(init=False)
    a: int = field(init=False)
    b: int = field(init=False)

    def __post_init__(self):
        if self.ell < 5:
            raise HypothesisError(f"ell must be at least 5, got {self.ell}")
        if self.ell > self.n:
            raise HypothesisError(f"ell={self.ell} exceeds order n={self.n}")
        if 3 * self.ell < 2 * self.n + 5:
            case = ExtremalCase.I
            a, b = divmod(self.n - self.ell + 1, (self.ell - 3) // 2)
        else:
            case, a, b = ExtremalCase.II, 0, 0
        object.__setattr__(self, "case", case)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def partition(self) -> PathPartition:
        """Linear forest joined to K_2 in the extremal graph"""
        if self.case is ExtremalCase.I:
            low = (self.ell - 3) // 2
            high = self.ell - 3 - low
            return PathPartition.of([high] + [low] * (self.a + 1) + [self.b])
        return PathPartition.of([2 * self.ell - self.n - 4] + [self.n - self.ell + 1] * 2)


def build_extremal(params: ExtremalParams) -> Graph:
    """
    Case I:  K_2 ∨ (P_ceil((l-3)/2) ∪ (a+1) P_floor((l-3)/2) ∪ P_b)
    Case II: K_2 ∨ (P_{2l-n-4} ∪ 2 P_{n-l+1})
    """
    partition = params.partition()
    graph = forest_join(complete_graph(2, "hub"), partition)
    if graph.n != params.n or partition.top_two != params.ell - 3:
        raise AssertionError(f"extremal construction inconsistent for {params}")
    logger.debug("Built extremal graph n=%d ell=%d case=%s forest=%s",
                 params.n, params.ell, params.case.value, partition)
    return graph


def build_planar_reference(n: int) -> Graph:
    """K_2 ∨ P_{n-2}, the planar graph of maximum spectral radius for large n"""
    if n < 2:
        raise HypothesisError(f"order must be at least 2, got {n}")
    return forest_join(complete_graph(2, "hub"), PathPartition((n - 2,)))


def contains_spanning_k2_join(g: Graph) -> bool:
    """Whether two adjacent vertices are both adjacent to every other vertex"""
    if g.n < 2:
        return False
    universal = np.flatnonzero(g.degrees() == g.n - 1)
    return len(universal) >= 2
