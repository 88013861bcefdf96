"""Graph values, constructions, graph6 I/O, planarity and cycle tests"""
from .core import Edge, Graph
from .constructions import (
    ExtremalCase,
    ExtremalParams,
    PathPartition,
    build_extremal,
    build_path,
    build_planar_reference,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    contains_spanning_k2_join,
    disjoint_union,
    empty_graph,
    forest_join,
    join,
    star,
)
from .cycles import forest_join_cl_free, has_cycle_of_length
from .graph6 import decode, encode, encode_str, iter_records
from .planarity import KuratowskiWitness, PlanarityResult, WitnessKind, is_planar

__all__ = [
    "Edge",
    "Graph",
    "ExtremalCase",
    "ExtremalParams",
    "PathPartition",
    "build_extremal",
    "build_path",
    "build_planar_reference",
    "complete_bipartite",
    "complete_graph",
    "complete_multipartite",
    "contains_spanning_k2_join",
    "disjoint_union",
    "empty_graph",
    "forest_join",
    "join",
    "star",
    "forest_join_cl_free",
    "has_cycle_of_length",
    "decode",
    "encode",
    "encode_str",
    "iter_records",
    "KuratowskiWitness",
    "PlanarityResult",
    "WitnessKind",
    "is_planar",
]
