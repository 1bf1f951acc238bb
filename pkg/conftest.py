"""
Shared fixtures: named graphs, forbidden-subgraph fixtures and the
built-in catalog of connected graphs
"""
import pytest

from utils.catalog_loader import connected_graphs
from utils.graph_core import (complete_bipartite_graph, complete_graph, cycle_graph, from_edges,
                              path_graph, petersen_graph, star_graph)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: sweeps over every connected graph of order 7")


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def paw():
    """Triangle 0-1-2 with a pendant vertex 3 on 2"""
    return from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


@pytest.fixture
def c4_pendant():
    """4-cycle with a pendant vertex"""
    return from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])


@pytest.fixture
def named_graphs():
    return {
        'K1': complete_graph(1),
        'K2': complete_graph(2),
        'K4': complete_graph(4),
        'P3': path_graph(3),
        'P4': path_graph(4),
        'C4': cycle_graph(4),
        'C5': cycle_graph(5),
        'S5': star_graph(5),
        'K23': complete_bipartite_graph(2, 3),
        'Petersen': petersen_graph(),
    }


@pytest.fixture(scope='session')
def small_catalog():
    """Every connected graph of order 1..6"""
    return [g for n in range(1, 7) for g in connected_graphs(n)]


@pytest.fixture(scope='session')
def order7_catalog():
    return list(connected_graphs(7))
