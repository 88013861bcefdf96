"""
Short names for the small graphs used as H and T in lemma instances

    K3      complete graph         E5     empty graph K̄_5
    P4      path                   S4     star K_1 ∨ K̄_4
    3P2     three disjoint P_2     P3+E2  disjoint union of terms

Orders may be 0 (P0, E0) for the empty graph.
"""
import re
from dataclasses import dataclass
from typing import Union

from ..lib.errors import InvalidGraphError
from ..graphs.constructions import build_path, complete_graph, disjoint_union, empty_graph, star
from ..graphs.core import Graph
from ..graphs.graph6 import encode_str

_TERM = re.compile(r"^(\d*)([KEPS])(\d+)$")


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph


def _build_term(kind: str, order: int) -> Graph:
    if kind == "K":
        return complete_graph(order)
    if kind == "E":
        return empty_graph(order)
    if kind == "P":
        return build_path(order).with_labels(None)
    if order < 1:
        raise InvalidGraphError("a star needs at least one leaf")
    return star(order).with_labels(None)


def parse_graph_name(name: str) -> Graph:
    """Build the graph named by `name`"""
    terms = []
    for raw in name.replace(" ", "").split("+"):
        match = _TERM.match(raw)
        if not match:
            raise InvalidGraphError(f"cannot parse graph name {name!r} at {raw!r}")
        count = int(match.group(1)) if match.group(1) else 1
        terms.extend([_build_term(match.group(2), int(match.group(3)))] * count)
    return disjoint_union(terms).with_labels(None)


def resolve(graph: Union[str, Graph, NamedGraph]) -> NamedGraph:
    """Accept a name, a Graph or a NamedGraph; unnamed graphs are named by their graph6"""
    if isinstance(graph, NamedGraph):
        return graph
    if isinstance(graph, str):
        return NamedGraph(graph, parse_graph_name(graph))
    return NamedGraph(f"graph6:{encode_str(graph)}", graph)
