"""
Graph representation

An undirected simple graph stored as a dense, read-only symmetric boolean
adjacency matrix. Values are immutable after construction and safe to share
across worker processes.
"""
from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..lib.errors import InvalidGraphError

Edge = Tuple[int, int]


class Graph:
    """
    Undirected simple graph on vertices 0..n-1.

    Optional `labels` map each vertex to a role tag such as "hub 0" or
    "path 2, position 1"; they never affect equality or hashing.
    """

    __slots__ = ("_adj", "_labels", "_key")

    def __init__(self, adjacency: np.ndarray, labels: Optional[Sequence[Optional[str]]] = None):
        adj = np.array(adjacency, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InvalidGraphError(f"adjacency must be square, got shape {adj.shape}")
        if adj.shape[0] and adj.diagonal().any():
            raise InvalidGraphError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise InvalidGraphError("adjacency must be symmetric")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != adj.shape[0]:
                raise InvalidGraphError(
                    f"{len(labels)} labels for {adj.shape[0]} vertices"
                )
            if all(label is None for label in labels):
                labels = None
        adj.flags.writeable = False
        self._adj = adj
        self._labels = labels
        self._key = None

    # ==================== Constructors ====================

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Edge],
        labels: Optional[Sequence[Optional[str]]] = None,
    ) -> "Graph":
        """Build a graph on n vertices from an edge list"""
        if n < 0:
            raise InvalidGraphError(f"vertex count must be non-negative, got {n}")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj, labels)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Build from a networkx graph, vertices taken in node iteration order"""
        nodes = list(g.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()))

    def __reduce__(self):
        return (Graph, (np.array(self._adj), self._labels))

    # ==================== Basic properties ====================

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix"""
        return self._adj

    @property
    def labels(self) -> Optional[Tuple[Optional[str], ...]]:
        return self._labels

    def label(self, u: int) -> Optional[str]:
        self.check_vertex(u)
        return None if self._labels is None else self._labels[u]

    @property
    def edge_count(self) -> int:
        return int(self._adj.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1).astype(np.int64)

    def degree(self, u: int) -> int:
        self.check_vertex(u)
        return int(self._adj[u].sum())

    @property
    def max_degree(self) -> int:
        return int(self.degrees().max()) if self.n else 0

    def neighbors(self, u: int) -> List[int]:
        self.check_vertex(u)
        return np.flatnonzero(self._adj[u]).tolist()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self._adj[u, v])

    def edges(self) -> List[Edge]:
        """Edges as (u, v) with u < v, in row-major order"""
        rows, cols = np.nonzero(np.triu(self._adj, k=1))
        return list(zip(rows.tolist(), cols.tolist()))

    def check_vertex(self, u: int) -> None:
        if not isinstance(u, (int, np.integer)) or not 0 <= u < self.n:
            raise InvalidGraphError(f"invalid vertex id {u!r} for graph of order {self.n}")

    def adjacency_matrix(self, dtype=np.float64) -> np.ndarray:
        """A(G) as a fresh array of the requested dtype"""
        return self._adj.astype(dtype)

    # ==================== Derived graphs ====================

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on the remaining vertices, original order kept"""
        drop = set()
        for u in vertices:
            self.check_vertex(u)
            drop.add(int(u))
        keep = [u for u in range(self.n) if u not in drop]
        return self.induced_subgraph(keep)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        idx = np.asarray(vertices, dtype=np.int64)
        labels = None if self._labels is None else [self._labels[i] for i in idx]
        return Graph(self._adj[np.ix_(idx, idx)], labels)

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Graph in which old vertex u becomes permutation[u]"""
        perm = np.asarray(permutation, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(self.n)):
            raise InvalidGraphError("relabel needs a permutation of 0..n-1")
        inverse = np.empty_like(perm)
        inverse[perm] = np.arange(self.n)
        labels = None if self._labels is None else [self._labels[i] for i in inverse]
        return Graph(self._adj[np.ix_(inverse, inverse)], labels)

    def with_labels(self, labels: Optional[Sequence[Optional[str]]]) -> "Graph":
        return Graph(self._adj, labels)

    # ==================== Structure ====================

    def components(self) -> List[List[int]]:
        """Connected components, each sorted, ordered by smallest vertex"""
        seen = np.zeros(self.n, dtype=bool)
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            component = [start]
            while queue:
                u = queue.popleft()
                for v in np.flatnonzero(self._adj[u] & ~seen):
                    seen[v] = True
                    queue.append(int(v))
                    component.append(int(v))
            result.append(sorted(component))
        return result

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def bfs_distances(self, source: int) -> np.ndarray:
        """Distances from source; -1 marks unreachable vertices"""
        self.check_vertex(source)
        dist = np.full(self.n, -1, dtype=np.int64)
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in np.flatnonzero(self._adj[u] & (dist < 0)):
                dist[v] = dist[u] + 1
                queue.append(int(v))
        return dist

    def distance(self, u: int, v: int) -> Optional[int]:
        """d_G(u, v), or None when v is unreachable from u"""
        self.check_vertex(v)
        d = int(self.bfs_distances(u)[v])
        return None if d < 0 else d

    def is_bipartite(self) -> bool:
        color = np.full(self.n, -1, dtype=np.int64)
        for start in range(self.n):
            if color[start] >= 0:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in np.flatnonzero(self._adj[u]):
                    if color[v] < 0:
                        color[v] = 1 - color[u]
                        queue.append(int(v))
                    elif color[v] == color[u]:
                        return False
        return True

    def is_linear_forest(self) -> bool:
        """Disjoint union of paths: max degree at most 2 and acyclic"""
        if self.n == 0:
            return True
        return self.max_degree <= 2 and self.edge_count == self.n - len(self.components())

    # ==================== Interop and identity ====================

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def key(self) -> bytes:
        """Compact identity of the labeled graph (labels excluded)"""
        if self._key is None:
            upper = self._adj[np.triu_indices(self.n, k=1)]
            self._key = self.n.to_bytes(4, "little") + np.packbits(upper).tobytes()
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"
