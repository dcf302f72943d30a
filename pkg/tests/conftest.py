"""Shared fixtures for tensegrity-strata tests."""

import pytest

from tensegrity_strata.analysis.surgery import SurgeryI, SurgeryII
from tensegrity_strata.models import Configuration, Framework, Graph, Stress
from tensegrity_strata.sampling import Lcg64


@pytest.fixture
def k4_framework():
    """K4 at (0,0), (1,0), (2,2), (0,1)."""
    return Framework(
        Graph.complete(4),
        Configuration.from_values(2, [[0, 0], [1, 0], [2, 2], [0, 1]]),
    )


@pytest.fixture
def k4_stress(k4_framework):
    """The self-stress (6, -3, 6, 2, -4, 2) on edges 12, 13, 14, 23, 24, 34."""
    return Stress.from_vector(k4_framework.graph, [6, -3, 6, 2, -4, 2])


@pytest.fixture
def rng():
    return Lcg64.seeded(7)


@pytest.fixture
def surgery_i_setup():
    """Framework and vertex roles for surgery I.

    p lies on the ray v1v2 and q on the ray v1v3, each twice as far out.
    """
    graph = Graph(6, Graph.complete(4).edges).with_edges(
        [(1, 5), (2, 5), (1, 6), (3, 6), (4, 5), (4, 6), (5, 6)]
    )
    config = Configuration.from_values(
        2, [[0, 0], [2, 1], [-1, 2], [1, -3], [4, 2], [-2, 4]]
    )
    return Framework(graph, config), SurgeryI(v1=1, v2=2, v3=3, v4=4, p=5, q=6)


@pytest.fixture
def surgery_ii_setup():
    """Framework and vertex roles for surgery II, with a K4 on p, q, r, s."""
    outside = [(1, 5), (2, 5), (1, 6), (3, 6), (2, 7), (4, 7), (3, 8), (4, 8)]
    block = [(5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)]
    graph = Graph(8, Graph.complete(4).edges).with_edges(outside + block)
    config = Configuration.from_values(
        2, [[0, 0], [3, 0], [0, 3], [4, 5], [-2, 0], [0, -2], [5, 10], [8, 7]]
    )
    return Framework(graph, config), SurgeryII(v1=1, v2=2, v3=3, v4=4, p=5, q=6, r=7, s=8)
