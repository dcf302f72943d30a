"""Frameworks, stresses and sign matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..exact.matrix import ZERO, Vector, to_rational, vector
from ..exceptions import DimensionError, GraphError
from .graph import Edge, Graph, normalize_edge


@dataclass(frozen=True)
class Configuration:
    """Ordered points ``p_1..p_n`` in rational d-space."""

    d: int
    points: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.d < 1:
            raise DimensionError("ambient dimension must be at least 1")
        for index, p in enumerate(self.points, start=1):
            if len(p) != self.d:
                raise DimensionError(f"point v{index} has {len(p)} coordinates, expected {self.d}")

    @classmethod
    def from_values(cls, d: int, points: Iterable[Iterable[int | Fraction | str]]) -> "Configuration":
        return cls(d, tuple(vector(p) for p in points))

    @property
    def n(self) -> int:
        return len(self.points)

    def point(self, v: int) -> Vector:
        """Point of vertex ``v`` (1-based)."""
        return self.points[v - 1]

    def restrict(self, indices: Sequence[int]) -> "Configuration":
        return Configuration(self.d, tuple(self.point(v) for v in indices))

    def replace(self, v: int, point: Sequence[int | Fraction]) -> "Configuration":
        points = list(self.points)
        points[v - 1] = vector(point)
        return Configuration(self.d, tuple(points))


@dataclass(frozen=True)
class Framework:
    """A graph drawn with straight edges on a configuration."""

    graph: Graph
    config: Configuration

    def __post_init__(self) -> None:
        if self.graph.n != self.config.n:
            raise DimensionError(
                f"graph has {self.graph.n} vertices but configuration has {self.config.n} points"
            )

    @property
    def d(self) -> int:
        return self.config.d

    @property
    def n(self) -> int:
        return self.graph.n

    def with_graph(self, graph: Graph) -> "Framework":
        return Framework(graph, self.config)


@dataclass(frozen=True)
class Stress:
    """A tension on each edge, keyed by the lexicographic edge order."""

    edges: tuple[Edge, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.edges) != len(self.values):
            raise DimensionError(f"{len(self.values)} tensions for {len(self.edges)} edges")
        if list(self.edges) != sorted(set(self.edges)):
            raise GraphError("stress edges must be distinct and in lexicographic order")

    @classmethod
    def zeros(cls, graph: Graph) -> "Stress":
        return cls(graph.edge_order, (ZERO,) * graph.edge_count)

    @classmethod
    def from_vector(cls, graph: Graph, values: Sequence[int | Fraction | str]) -> "Stress":
        return cls(graph.edge_order, vector(values))

    @classmethod
    def from_mapping(cls, graph: Graph, tensions: Mapping[Edge, int | Fraction | str]) -> "Stress":
        """Build a stress from a partial map; unlisted edges get tension 0."""
        normalized = {normalize_edge(*e): to_rational(w) for e, w in tensions.items()}
        unknown = set(normalized) - graph.edges
        if unknown:
            e = min(unknown)
            raise GraphError(f"no such edge: {e[0]}-{e[1]}")
        return cls(graph.edge_order, tuple(normalized.get(e, ZERO) for e in graph.edge_order))

    def tension(self, i: int, j: int) -> Fraction:
        e = normalize_edge(i, j)
        try:
            return self.values[self.edges.index(e)]
        except ValueError:
            return ZERO

    def as_dict(self) -> dict[Edge, Fraction]:
        return dict(zip(self.edges, self.values))

    def scaled(self, c: int | Fraction) -> "Stress":
        return Stress(self.edges, tuple(c * w for w in self.values))

    def __add__(self, other: "Stress") -> "Stress":
        if self.edges != other.edges:
            raise DimensionError("stresses are keyed by different edge sets")
        return Stress(self.edges, tuple(a + b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Stress":
        return self.scaled(-1)

    @property
    def is_zero(self) -> bool:
        return all(w == 0 for w in self.values)

    @property
    def support(self) -> frozenset[Edge]:
        return frozenset(e for e, w in zip(self.edges, self.values) if w != 0)

    def extend_to(self, graph: Graph) -> "Stress":
        """Zero-extension to a supergraph."""
        missing = set(self.edges) - graph.edges
        if missing:
            e = min(missing)
            raise GraphError(f"edge {e[0]}-{e[1]} is not in the target graph")
        return Stress.from_mapping(graph, self.as_dict())

    def restrict_to(self, graph: Graph) -> "Stress":
        """Drop the edges absent from ``graph``; they must carry tension 0."""
        tensions = self.as_dict()
        for e in set(self.edges) - graph.edges:
            if tensions[e] != 0:
                raise GraphError(f"dropped edge {e[0]}-{e[1]} carries tension {tensions[e]}")
        return Stress.from_mapping(graph, {e: w for e, w in tensions.items() if e in graph.edges})

    def normalized(self) -> "Stress":
        """Scale so the first nonzero tension is 1."""
        lead = next((w for w in self.values if w != 0), None)
        return self if lead is None else self.scaled(1 / lead)


@dataclass(frozen=True)
class Tensegrity:
    """A framework together with a stress on its edges."""

    framework: Framework
    stress: Stress

    def __post_init__(self) -> None:
        if self.stress.edges != self.framework.graph.edge_order:
            raise DimensionError("stress is keyed by edges of another graph")


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True, order=True)
class SignMatrix:
    """Strut-cable matrix, stored on graph edges only.

    Entries off the edge list are 0. A positive entry marks a strut, a
    negative one a cable.
    """

    n: int
    edges: tuple[Edge, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.edges) != len(self.signs):
            raise DimensionError("one sign per edge expected")
        if any(s not in (-1, 0, 1) for s in self.signs):
            raise ValueError("signs must be -1, 0 or 1")

    @classmethod
    def of(cls, n: int, stress: Stress) -> "SignMatrix":
        return cls(n, stress.edges, tuple(_sign(w) for w in stress.values))

    @classmethod
    def zero(cls, graph: Graph) -> "SignMatrix":
        return cls(graph.n, graph.edge_order, (0,) * graph.edge_count)

    def entry(self, i: int, j: int) -> int:
        if i == j:
            return 0
        try:
            return self.signs[self.edges.index(normalize_edge(i, j))]
        except ValueError:
            return 0

    def as_rows(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def __neg__(self) -> "SignMatrix":
        return SignMatrix(self.n, self.edges, tuple(-s for s in self.signs))

    @property
    def is_zero(self) -> bool:
        return not any(self.signs)

    @property
    def nonzero_on_all_edges(self) -> bool:
        return all(self.signs)

    def pattern(self) -> str:
        """Compact ``+-0`` string in edge order."""
        return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in self.signs)


@dataclass(frozen=True)
class SelfStressSpace:
    """A basis of W(G,P) for one framework."""

    framework: Framework
    basis: tuple[Stress, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def edge_order(self) -> tuple[Edge, ...]:
        return self.framework.graph.edge_order

    def combination(self, coeffs: Sequence[int | Fraction]) -> Stress:
        if len(coeffs) != self.dim:
            raise DimensionError(f"{len(coeffs)} coefficients for a {self.dim}-dimensional space")
        total = Stress.zeros(self.framework.graph)
        for c, s in zip(coeffs, self.basis):
            total = total + s.scaled(to_rational(c))
        return total

    def coordinate_functionals(self) -> list[Vector]:
        """For each edge, its tension as a linear function of basis coefficients."""
        return [
            tuple(s.values[k] for s in self.basis)
            for k in range(len(self.edge_order))
        ]
