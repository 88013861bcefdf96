"""
spexlab - spectral extremal toolkit for cycle-free planar graphs
Walk counting, Perron eigensolves, the multipartite series equation,
lemma verification sweeps and extremal searches.
"""

__version__ = "1.0.0"
