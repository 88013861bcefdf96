"""
Pytest Configuration and Shared Fixtures
"""
import os
import sys
from pathlib import Path
from typing import List

import networkx as nx
import numpy as np
import pytest

# Add repo root to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

import src.config.settings  # noqa: F401,E402
from src.graphs.constructions import (  # noqa: E402
    PathPartition,
    build_path,
    complete_bipartite,
    complete_graph,
    empty_graph,
    forest_join,
    star,
)
from src.graphs.core import Graph  # noqa: E402
from src.lab.reports import LemmaReport, Verdict  # noqa: E402
from src.spectral.solver import clear_cache  # noqa: E402


# ==================== Graph Fixtures ====================

@pytest.fixture
def triangle() -> Graph:
    return complete_graph(3)


@pytest.fixture
def path5() -> Graph:
    return build_path(5)


@pytest.fixture
def k24() -> Graph:
    """K_{2,4}, rho = sqrt(8)"""
    return complete_bipartite(2, 4)


@pytest.fixture
def star6() -> Graph:
    """K_1 ∨ E_6, rho = sqrt(6)"""
    return star(6)


@pytest.fixture
def k5() -> Graph:
    return complete_graph(5)


@pytest.fixture
def k33() -> Graph:
    return complete_bipartite(3, 3)


@pytest.fixture
def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture
def disconnected() -> Graph:
    """K_3 ∪ P_4 ∪ K_1"""
    from src.graphs.constructions import disjoint_union
    return disjoint_union([complete_graph(3), build_path(4), empty_graph(1)])


@pytest.fixture
def extremal_20_15() -> Graph:
    """K_2 ∨ (P_6 ∪ 2 P_6)"""
    return forest_join(complete_graph(2), PathPartition((6, 6, 6)))


@pytest.fixture
def small_graphs(triangle, path5, k24, star6, k5, petersen, disconnected) -> List[Graph]:
    return [triangle, path5, k24, star6, k5, petersen, disconnected]


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(42)


# ==================== Report Fixtures ====================

@pytest.fixture
def sample_reports() -> List[LemmaReport]:
    return [
        LemmaReport(lemma="lemma1", params={"n1": 5, "n2": 1}, verdict=Verdict.PASS,
                    margin=0.0123456789012345, rho1=3.1, rho2=3.0, runtime_s=0.5),
        LemmaReport(lemma="lemma1", params={"n1": 6, "n2": 1}, verdict=Verdict.INCONCLUSIVE,
                    margin=None, runtime_s=0.25),
    ]


# ==================== Environment Fixtures ====================

@pytest.fixture(autouse=True)
def clean_env():
    """Clean environment before each test"""
    original_env = os.environ.copy()

    yield

    os.environ.clear()
    os.environ.update(original_env)


@pytest.fixture(autouse=True)
def fresh_spectral_cache():
    """Spectral results are memoized per process; start every test cold"""
    clear_cache()
    yield
    clear_cache()
