"""Graph model: vertices 1..n and unordered edges."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import networkx as nx

from ..exceptions import GraphError

Edge = tuple[int, int]


def normalize_edge(i: int, j: int) -> Edge:
    """Return the edge ``{i, j}`` as an ordered pair ``(min, max)``."""
    if i == j:
        raise GraphError(f"loop at v{i}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``.

    Edges are stored as ordered pairs ``(i, j)`` with ``i < j``. The edge order
    used for matrices, stresses and files is the lexicographic order of these
    pairs, see :attr:`edge_order`.
    """

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        for i, j in self.edges:
            if i >= j:
                raise GraphError(f"edge ({i}, {j}) is not normalized")
            if i < 1 or j > self.n:
                raise GraphError(f"edge ({i}, {j}) outside vertices 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """Build a graph, rejecting loops and repeated edges."""
        seen: set[Edge] = set()
        for pair in edges:
            i, j = tuple(pair)
            e = normalize_edge(int(i), int(j))
            if e in seen:
                raise GraphError(f"edge {e[0]}-{e[1]} listed twice")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        """K_{a,b} with parts ``1..a`` and ``a+1..a+b``."""
        return cls(
            a + b,
            frozenset((i, j) for i in range(1, a + 1) for j in range(a + 1, a + b + 1)),
        )

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_order(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and normalize_edge(i, j) in self.edges

    def add_edge(self, i: int, j: int) -> "Graph":
        e = normalize_edge(i, j)
        if e in self.edges:
            raise GraphError(f"edge {e[0]}-{e[1]} already present")
        if e[0] < 1 or e[1] > self.n:
            raise GraphError(f"edge {e[0]}-{e[1]} outside vertices 1..{self.n}")
        return Graph(self.n, self.edges | {e})

    def delete_edge(self, i: int, j: int) -> "Graph":
        e = normalize_edge(i, j)
        if e not in self.edges:
            raise GraphError(f"no such edge: {e[0]}-{e[1]}")
        return Graph(self.n, self.edges - {e})

    def neighbors(self, v: int) -> list[int]:
        return sorted(j if i == v else i for i, j in self.edges if v in (i, j))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def min_degree(self) -> int:
        return min((self.degree(v) for v in self.vertices), default=0)

    def incident_edges(self, v: int) -> list[Edge]:
        return [e for e in self.edge_order if v in e]

    def induced_subgraph(self, vs: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on ``vs``, reindexed ``1..|vs|`` in ascending order.

        Returns:
            The subgraph and the map from new indices to original indices.
        """
        chosen = sorted(set(vs))
        for v in chosen:
            if v < 1 or v > self.n:
                raise GraphError(f"vertex {v} outside 1..{self.n}")
        new_index = {old: new for new, old in enumerate(chosen, start=1)}
        edges = frozenset(
            (new_index[i], new_index[j])
            for i, j in self.edges
            if i in new_index and j in new_index
        )
        return Graph(len(chosen), edges), {new: old for old, new in new_index.items()}

    def without_vertices(self, vs: Iterable[int]) -> "Graph":
        """Drop every edge touching ``vs``; the vertices stay as isolated labels."""
        dropped = set(vs)
        return Graph(self.n, frozenset(e for e in self.edges if not dropped & set(e)))

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Graph":
        g = self
        for i, j in edges:
            g = g.add_edge(i, j)
        return g

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edge_order)
        return g

    def label(self) -> str:
        return " ".join(f"{i}-{j}" for i, j in self.edge_order)
