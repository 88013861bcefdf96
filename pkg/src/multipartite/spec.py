"""
Complete multipartite graphs with graphs embedded in their parts
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..lib.errors import InvalidGraphError
from ..graphs.constructions import empty_graph
from ..graphs.core import Graph


@dataclass(frozen=True)
class Part:
    """One part of size n_s carrying the edges of H_s on its first |H_s| vertices"""

    size: int
    graph: Graph

    def __post_init__(self):
        if self.size < 1:
            raise InvalidGraphError(f"part size must be positive, got {self.size}")
        if self.graph.n > self.size:
            raise InvalidGraphError(
                f"embedded graph of order {self.graph.n} does not fit in a part of size {self.size}"
            )

    @property
    def max_degree(self) -> int:
        return self.graph.max_degree


@dataclass(frozen=True)
class MultipartiteSpec:
    """K_{n_1,...,n_r} with H_s embedded in part s, r >= 2"""

    parts: Tuple[Part, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if len(parts) < 2:
            raise InvalidGraphError(f"need at least two parts, got {len(parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[Tuple[int, Optional[Graph]]]) -> "MultipartiteSpec":
        """Build from (size, graph) pairs; a missing graph means no edges in that part"""
        return cls(tuple(Part(size, graph if graph is not None else empty_graph(0))
                         for size, graph in parts))

    @classmethod
    def from_join(cls, left: Graph, right: Graph) -> "MultipartiteSpec":
        """left ∨ right as the two-part spec (|left|, left), (|right|, right)"""
        return cls((Part(left.n, left), Part(right.n, right)))

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(part.size for part in self.parts)

    @property
    def max_embedded_degree(self) -> int:
        return max(part.max_degree for part in self.parts)

    def realize(self) -> Graph:
        """The graph itself: parts laid out in order, H_s on each part's first vertices"""
        n = self.n
        adj = np.ones((n, n), dtype=bool)
        labels = []
        offset = 0
        for s, part in enumerate(self.parts):
            block = slice(offset, offset + part.size)
            adj[block, block] = False
            h = part.graph
            adj[offset:offset + h.n, offset:offset + h.n] = h.adjacency
            labels.extend(f"part {s}, vertex {i}" for i in range(part.size))
            offset += part.size
        return Graph(adj, labels)

    def describe(self) -> str:
        return " ∨ ".join(f"({p.size}, n={p.graph.n} e={p.graph.edge_count})" for p in self.parts)
