"""Numerical verification of the walk identities and path-transfer lemmas"""
from .crosschecks import (
    check_anchor,
    check_containment,
    check_observation,
    check_rayleigh,
    check_series_root,
)
from .gfun import check_gfun, g_lemma2, g_lemma3
from .named import NamedGraph, parse_graph_name, resolve
from .reports import LemmaReport, Verdict, verdict_counts
from .spectral_lemmas import (
    build_pair,
    explore_below_threshold,
    verify_lemma1,
    verify_lemma2,
    verify_lemma3,
)
from .walk_lemmas import check_fact1, check_wdiff, check_weval, fact1_report, weval_rhs

__all__ = [
    "check_anchor",
    "check_containment",
    "check_observation",
    "check_rayleigh",
    "check_series_root",
    "check_gfun",
    "g_lemma2",
    "g_lemma3",
    "NamedGraph",
    "parse_graph_name",
    "resolve",
    "LemmaReport",
    "Verdict",
    "verdict_counts",
    "build_pair",
    "explore_below_threshold",
    "verify_lemma1",
    "verify_lemma2",
    "verify_lemma3",
    "check_fact1",
    "check_wdiff",
    "check_weval",
    "fact1_report",
    "weval_rhs",
]
