"""Framework files: vertices, edges and an optional stress.

Example::

    {
      "d": 2,
      "vertices": [["0", "0"], ["1", "0"], ["2", "2"], ["0", "1"]],
      "edges": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]],
      "stress": [{"edge": [1, 2], "tension": "6"}, ...]
    }

Edges missing from ``stress`` carry tension 0. A graph-only file may give
``"n"`` instead of ``"vertices"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ..models import Configuration, Framework, Graph, Stress, normalize_edge
from ..utils import format_rational
from .common import Document, dumps


@dataclass(frozen=True)
class FrameworkFile:
    framework: Framework
    stress: Optional[Stress] = None


def _edges(doc: Document, data: dict, n: int) -> Graph:
    raw = doc.field(data, "edges", list)
    return Graph.from_edges(n, [doc.pair(e, "edge") for e in raw])


def parse_framework(doc: Document) -> FrameworkFile:
    data = doc.data
    d = doc.field(data, "d", int)
    if d < 1:
        raise doc.error(f"dimension must be at least 1, got {d}", '"d"')
    raw_vertices = doc.field(data, "vertices", list)
    points = []
    for index, raw in enumerate(raw_vertices, start=1):
        if not isinstance(raw, list):
            raise doc.item_error(f"vertex v{index} must be a list of coordinates", "vertices", index - 1)
        if len(raw) != d:
            raise doc.item_error(f"vertex v{index} has {len(raw)} coordinates, expected {d}", "vertices", index - 1)
        points.append(tuple(doc.rational(c, f"coordinate of v{index}") for c in raw))
    graph = _edges(doc, data, len(points))
    framework = Framework(graph, Configuration(d, tuple(points)))

    raw_stress = doc.field(data, "stress", list, required=False)
    if raw_stress is None:
        return FrameworkFile(framework)
    tensions = {}
    for item in raw_stress:
        e = normalize_edge(*doc.pair(doc.field(item, "edge", list), "stress edge"))
        if e in tensions:
            raise doc.error(f"stress lists edge {e[0]}-{e[1]} twice")
        tensions[e] = doc.rational(doc.field(item, "tension", object), f"tension on {e[0]}-{e[1]}")
    return FrameworkFile(framework, Stress.from_mapping(graph, tensions))


def load_framework(path: str | Path) -> FrameworkFile:
    return parse_framework(Document.read(path))


def loads_framework(text: str) -> FrameworkFile:
    return parse_framework(Document(text))


def load_graph(path: str | Path) -> Graph:
    """Graph of a framework file, or of a file giving ``n`` and ``edges``."""
    doc = Document.read(path)
    if isinstance(doc.data, dict) and "vertices" in doc.data:
        return parse_framework(doc).framework.graph
    n = doc.field(doc.data, "n", int)
    if n < 0:
        raise doc.error(f"vertex count must be non-negative, got {n}", '"n"')
    return _edges(doc, doc.data, n)


def dumps_framework(framework: Framework, stress: Optional[Stress] = None) -> str:
    data: dict = {
        "d": framework.d,
        "vertices": [[format_rational(c) for c in p] for p in framework.config.points],
        "edges": [list(e) for e in framework.graph.edge_order],
    }
    if stress is not None:
        data["stress"] = [
            {"edge": list(e), "tension": format_rational(w)} for e, w in zip(stress.edges, stress.values)
        ]
    return dumps(data)
