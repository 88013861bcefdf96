"""Walk counting and walk-generating series"""
from .engine import (
    WalkTable,
    crossing_counts,
    walk_count_crossing,
    walk_count_from,
    walk_count_total,
    walk_counts,
    walk_table,
    walk_vectors,
)
from .oracle import enumerate_walks_oracle, walks_crossing, walks_from
from .series import SeriesEval, certified_terms, walk_series

__all__ = [
    "WalkTable",
    "crossing_counts",
    "walk_count_crossing",
    "walk_count_from",
    "walk_count_total",
    "walk_counts",
    "walk_table",
    "walk_vectors",
    "enumerate_walks_oracle",
    "walks_crossing",
    "walks_from",
    "SeriesEval",
    "certified_terms",
    "walk_series",
]
