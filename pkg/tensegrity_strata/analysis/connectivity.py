"""Connectivity predicates and small-graph searches.

Everything here is exhaustive: catalog graphs have at most a dozen
vertices, so separators are found by trying every vertex or edge subset in
increasing size.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Optional

import networkx as nx

from ..models import Graph
from ..sampling import Lcg64

logger = logging.getLogger(__name__)


def _is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def vertex_connectivity(g: Graph) -> int:
    nxg = g.to_networkx()
    if g.n < 2 or not nx.is_connected(nxg):
        return 0
    if _is_complete(g):
        return g.n - 1
    for k in range(1, g.n - 1):
        for cut in combinations(g.vertices, k):
            if not nx.is_connected(nx.restricted_view(nxg, cut, [])):
                return k
    return g.n - 1


def edge_connectivity(g: Graph) -> int:
    nxg = g.to_networkx()
    if g.n < 2 or not nx.is_connected(nxg):
        return 0
    bound = g.min_degree()
    edges = g.edge_order
    for k in range(1, bound):
        for cut in combinations(edges, k):
            if not nx.is_connected(nx.restricted_view(nxg, [], cut)):
                return k
    return bound


def connectivity(g: Graph) -> tuple[int, int]:
    """Vertex and edge connectivity ``(kappa, lambda)``.

    Disconnected graphs and graphs with fewer than two vertices give (0, 0).
    """
    kappa, lam = vertex_connectivity(g), edge_connectivity(g)
    logger.debug("connectivity of %s: kappa=%d lambda=%d", g.label(), kappa, lam)
    return kappa, lam


def find_induced_k4(g: Graph) -> Optional[tuple[int, int, int, int]]:
    """Lexicographically least vertex 4-set inducing K4."""
    for quad in combinations(g.vertices, 4):
        if all(g.has_edge(a, b) for a, b in combinations(quad, 2)):
            return quad
    return None


def is_laman(g: Graph) -> bool:
    """|E| = 2n-3 and every m >= 2 vertices span at most 2m-3 edges."""
    if g.n < 2 or g.edge_count != 2 * g.n - 3:
        return False
    for m in range(2, g.n):
        for vs in combinations(g.vertices, m):
            if g.induced_subgraph(vs)[0].edge_count > 2 * m - 3:
                return False
    return True


def random_connected_graph(n: int, p: Fraction, rng: Lcg64, max_tries: int = 1000) -> Graph:
    """Connected G(n, p) sample; each pair is an edge with probability ``p``."""
    pairs = list(combinations(range(1, n + 1), 2))
    for _ in range(max_tries):
        edges = [e for e in pairs if rng.rational(0, 1, 1000) < p]
        g = Graph.from_edges(n, edges)
        if n == 1 or nx.is_connected(g.to_networkx()):
            return g
    raise ValueError(f"no connected graph found for n={n}, p={p}")
