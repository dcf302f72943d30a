"""Named graphs and frameworks with the claims made about them.

Entries come in two kinds. ``paper-text`` entries restate published facts
and must verify exactly. ``derived-reconstruction`` entries rebuild an
object whose adjacency had to be inferred; their claims double as the
check that the reconstruction is right.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..exceptions import InputError
from ..geometry import ConditionSystem
from ..geometry.library import COLLINEAR_145, COLLINEAR_236, CONCURRENT_12_34_56, CONIC_123456
from ..models import Configuration, Edge, Framework, Graph, Stress


class Provenance(str, Enum):
    PAPER_TEXT = "paper-text"
    DERIVED = "derived-reconstruction"


@dataclass(frozen=True)
class WitnessClaim:
    """A condition system claimed to force dim W >= 1 on the entry's graph.

    Attributes:
        system: The condition system.
        expect_visible: Whether the forced self-stresses are nonzero on every
            edge. Collinear-triangle witnesses live on the triangle only.
    """

    system: ConditionSystem
    expect_visible: bool = True


@dataclass(frozen=True)
class CatalogEntry:
    """A catalog graph in dimension ``d`` with its claims."""

    name: str
    graph: Graph
    d: int
    provenance: Provenance
    expected_generic_dim: Optional[int] = None
    witnesses: tuple[WitnessClaim, ...] = ()
    zero_edges: tuple[Edge, ...] = ()
    framework: Optional[Framework] = None
    stress: Optional[Stress] = None
    description: str = ""
    recipe: str = ""
    tags: tuple[str, ...] = ()

    @property
    def derived(self) -> bool:
        return self.provenance is Provenance.DERIVED


def prism_graph(triangle: tuple[int, int, int]) -> Graph:
    """Two triangles joined by the rungs 1-2, 3-4, 5-6.

    ``triangle`` takes one endpoint of every rung; the other endpoints form
    the second triangle.
    """
    rungs = [(1, 2), (3, 4), (5, 6)]
    other = tuple(b if a in triangle else a for a, b in rungs)
    if sorted(set(triangle) | set(other)) != list(range(1, 7)):
        raise InputError(f"{triangle} does not take one endpoint of every rung")
    edges = rungs + [(triangle[0], triangle[1]), (triangle[0], triangle[2]), (triangle[1], triangle[2])]
    edges += [(other[0], other[1]), (other[0], other[2]), (other[1], other[2])]
    return Graph.from_edges(6, edges)


# triangles {1,4,5} and {2,3,6}
PRISM_TRIANGLE = (1, 4, 5)
PRISM_CANDIDATES = ((1, 3, 5), (1, 3, 6), (1, 4, 5), (1, 4, 6))

PRISM_WITNESSES = (
    WitnessClaim(CONCURRENT_12_34_56),
    WitnessClaim(COLLINEAR_145, expect_visible=False),
    WitnessClaim(COLLINEAR_236, expect_visible=False),
)


def _example_k4() -> CatalogEntry:
    graph = Graph.complete(4)
    framework = Framework(graph, Configuration.from_values(2, [[0, 0], [1, 0], [2, 2], [0, 1]]))
    return CatalogEntry(
        name="example_k4",
        graph=graph,
        d=2,
        provenance=Provenance.PAPER_TEXT,
        expected_generic_dim=1,
        framework=framework,
        stress=Stress.from_vector(graph, [6, -3, 6, 2, -4, 2]),
        description="K4 at (0,0),(1,0),(2,2),(0,1) with struts and cables",
    )


def _k_n(n: int, d: int) -> CatalogEntry:
    expected = (n - d - 1) * (n - d) // 2 if n >= d + 2 else 0
    return CatalogEntry(
        name=f"k{n}_d{d}",
        graph=Graph.complete(n),
        d=d,
        provenance=Provenance.PAPER_TEXT,
        expected_generic_dim=expected,
        description=f"complete graph K{n} in dimension {d}",
        tags=("complete",),
    )


def _k33_conic() -> CatalogEntry:
    return CatalogEntry(
        name="k33_conic",
        graph=Graph.complete_bipartite(3, 3),
        d=2,
        provenance=Provenance.PAPER_TEXT,
        expected_generic_dim=0,
        witnesses=(WitnessClaim(CONIC_123456),),
        description="K3,3; a tensegrity exists iff the six points lie on a conic",
    )


def _prism_g61() -> CatalogEntry:
    return CatalogEntry(
        name="prism_g61",
        graph=prism_graph(PRISM_TRIANGLE),
        d=2,
        provenance=Provenance.DERIVED,
        expected_generic_dim=0,
        witnesses=PRISM_WITNESSES,
        description="triangular prism, triangles v1v4v5 and v2v3v6, rungs v1v2, v3v4, v5v6",
        recipe="each condition is sampled constructively; on failure run prism_labeling_search",
    )


def _two_block_k4() -> CatalogEntry:
    block = Graph.complete(4).edge_order
    edges = list(block) + [(i + 4, j + 4) for i, j in block]
    edges.append((4, 5))
    return CatalogEntry(
        name="two_block_k4",
        graph=Graph.from_edges(8, edges),
        d=2,
        provenance=Provenance.DERIVED,
        expected_generic_dim=2,
        zero_edges=((4, 5),),
        description="two K4 blocks joined by the edge v4v5, which never carries tension",
        recipe="compare generic dims with and without v4v5 and check the edge is always zero",
    )


def _build() -> dict[str, CatalogEntry]:
    entries = [_example_k4()]
    entries += [_k_n(n, d) for n in range(3, 9) for d in range(1, 4)]
    entries += [_k33_conic(), _prism_g61(), _two_block_k4()]
    return {e.name: e for e in entries}


CATALOG: dict[str, CatalogEntry] = _build()


def catalog_list() -> list[CatalogEntry]:
    return list(CATALOG.values())


def lookup(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise InputError(f"unknown catalog entry: {name}") from None
