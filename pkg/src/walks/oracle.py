"""
Exhaustive walk enumeration, used as an independent oracle for the
matrix-based counts. Only for tiny graphs: output size is up to n * Δ^ell.
"""
from typing import List, Tuple

from ..config import config
from ..lib.errors import ScopeExceededError
from ..graphs.core import Graph

Walk = Tuple[int, ...]


def enumerate_walks_oracle(g: Graph, ell: int) -> List[Walk]:
    """All walks v_0 ... v_ell of length ell, in lexicographic order"""
    if g.n > config.ORACLE_MAX_N or ell > config.ORACLE_MAX_LENGTH:
        raise ScopeExceededError(
            f"walk oracle capped at n <= {config.ORACLE_MAX_N}, "
            f"ell <= {config.ORACLE_MAX_LENGTH}; got n={g.n}, ell={ell}"
        )
    if ell < 0:
        raise ScopeExceededError(f"walk length must be non-negative, got {ell}")

    neighbours = [g.neighbors(u) for u in range(g.n)]
    walks: List[Walk] = [(u,) for u in range(g.n)]
    for _ in range(ell):
        walks = [walk + (v,) for walk in walks for v in neighbours[walk[-1]]]
    return walks


def walks_from(walks: List[Walk], u: int) -> List[Walk]:
    return [w for w in walks if w[0] == u]


def walks_crossing(walks: List[Walk], u: int, v: int) -> List[Walk]:
    """Walks visiting both u and v somewhere, endpoints included"""
    return [w for w in walks if u in w and v in w]
