"""
Planarity testing with Kuratowski certificates

Counting bounds reject dense graphs without search (e <= 3n-6, and
e <= 2n-4 for bipartite graphs); everything else goes through the
left-right planarity test in networkx.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx

from .core import Graph

logger = logging.getLogger(__name__)


class WitnessKind(str, Enum):
    K5 = "K5"
    K33 = "K3,3"


@dataclass(frozen=True)
class KuratowskiWitness:
    """A subdivision of K5 or K3,3 contained in the graph"""

    kind: WitnessKind
    edges: Tuple[Tuple[int, int], ...]
    branch_vertices: Tuple[int, ...]


@dataclass(frozen=True)
class PlanarityResult:
    """Outcome of a planarity test; truthy iff the graph is planar"""

    planar: bool
    fast_rejected: bool = False
    # clockwise rotation system: vertex -> neighbours in cyclic order
    embedding: Optional[Dict[int, List[int]]] = field(default=None, compare=False)
    witness: Optional[KuratowskiWitness] = None

    def __bool__(self) -> bool:
        return self.planar


def exceeds_edge_bound(g: Graph) -> bool:
    """Necessary-condition check from Euler's formula"""
    if g.n < 3:
        return False
    e = g.edge_count
    if e > 3 * g.n - 6:
        return True
    return e > 2 * g.n - 4 and g.is_bipartite()


def _classify_witness(subgraph: nx.Graph) -> KuratowskiWitness:
    degrees = dict(subgraph.degree())
    branch = tuple(sorted(v for v, d in degrees.items() if d >= 3))
    kind = WitnessKind.K5 if any(d >= 4 for d in degrees.values()) else WitnessKind.K33
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in subgraph.edges()))
    return KuratowskiWitness(kind=kind, edges=edges, branch_vertices=branch)


def is_planar(g: Graph, embedding: bool = False, witness: bool = False) -> PlanarityResult:
    """
    Test planarity of g.

    Args:
        g: graph to test
        embedding: attach a combinatorial embedding when planar
        witness: attach a Kuratowski subdivision when non-planar; this
            disables the counting fast path, which yields no witness

    Returns:
        PlanarityResult, truthy iff g is planar
    """
    if not witness and exceeds_edge_bound(g):
        return PlanarityResult(planar=False, fast_rejected=True)

    planar, certificate = nx.check_planarity(g.to_networkx(), counterexample=witness)
    if planar:
        rotation = None
        if embedding:
            rotation = {int(v): [int(w) for w in nbrs] for v, nbrs in certificate.get_data().items()}
        return PlanarityResult(planar=True, embedding=rotation)

    found = _classify_witness(certificate) if witness else None
    if found is not None:
        logger.debug("Non-planar graph n=%d: %s subdivision on %d edges",
                     g.n, found.kind.value, len(found.edges))
    return PlanarityResult(planar=False, witness=found)
