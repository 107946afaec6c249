import pytest

from groverwalk.families import (
    complete_bipartite,
    cycle_graph,
    enumerate_connected,
    path_graph,
    two_tail_graph,
)
from groverwalk.graphs import build_graph


@pytest.fixture(scope="session")
def paw():
    return build_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])


@pytest.fixture(scope="session")
def named_graphs():
    """The graphs the period table talks about, by short name."""
    graphs = {
        "P_2": path_graph(2),
        "C_3": cycle_graph(3),
        "C_4": cycle_graph(4),
        "C_5": cycle_graph(5),
        "K_13": complete_bipartite(1, 3),
        "K_23": complete_bipartite(2, 3),
        "TT_31": two_tail_graph(3, 1),
        "TT_32": two_tail_graph(3, 2),
    }
    return graphs


@pytest.fixture(scope="session")
def connected_by_n():
    """Connected isomorphism-class representatives, n = 1..6."""
    return {n: enumerate_connected(n) for n in range(1, 7)}
