"""Surgery spec files.

::

    {"kind": "I", "direction": "forward",
     "vertices": {"v1": 1, "v2": 2, "v3": 3, "v4": 4, "p": 5, "q": 6}}

    {"kind": "general", "direction": "backward",
     "subgraph": [1, 2, 3, 4], "e1": [1, 2], "e2": [3, 4],
     "certificate": [{"edge": [1, 2], "tension": "1"}, ...]}

A certificate is keyed by edges of the full graph, so it is resolved
against the framework the surgery is applied to.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from ..analysis.surgery import Direction, GeneralSurgery, SurgeryI, SurgeryII, SurgerySpec
from ..models import Graph, Stress, normalize_edge
from .common import Document

NAMED_VERTICES = {
    "I": ("v1", "v2", "v3", "v4", "p", "q"),
    "II": ("v1", "v2", "v3", "v4", "p", "q", "r", "s"),
}


def parse_surgery(doc: Document, graph: Optional[Graph] = None) -> SurgerySpec:
    data = doc.data
    kind = doc.field(data, "kind", str)
    direction_text = doc.field(data, "direction", str, required=False, default="forward")
    try:
        direction = Direction(direction_text)
    except ValueError:
        raise doc.error(f"direction must be forward or backward, got {direction_text!r}", f'"{direction_text}"') from None

    if kind in NAMED_VERTICES:
        vertices = doc.field(data, "vertices", dict)
        missing = [name for name in NAMED_VERTICES[kind] if name not in vertices]
        if missing:
            raise doc.error(f"surgery {kind} needs vertices {', '.join(missing)}", '"vertices"')
        named = {name: doc.integer(vertices[name], name) for name in NAMED_VERTICES[kind]}
        cls = SurgeryI if kind == "I" else SurgeryII
        return SurgerySpec(cls(**named), direction)

    if kind != "general":
        raise doc.error(f"unknown surgery kind {kind!r}", f'"{kind}"')
    subgraph = tuple(doc.integer(v, "subgraph vertex") for v in doc.field(data, "subgraph", list))
    e1 = normalize_edge(*doc.pair(doc.field(data, "e1", list), "e1"))
    e2 = normalize_edge(*doc.pair(doc.field(data, "e2", list), "e2"))
    certificate = None
    raw = doc.field(data, "certificate", list, required=False)
    if raw is not None:
        if graph is None:
            raise doc.error("a certificate needs the framework graph to resolve its edges")
        tensions = {}
        for item in raw:
            e = normalize_edge(*doc.pair(doc.field(item, "edge", list), "certificate edge"))
            tensions[e] = doc.rational(doc.field(item, "tension", object), f"certificate tension on {e[0]}-{e[1]}")
        certificate = Stress.from_mapping(graph, tensions)
    return SurgerySpec(GeneralSurgery(subgraph, e1, e2, certificate), direction)


def load_surgery(path: str | Path, graph: Optional[Graph] = None) -> SurgerySpec:
    return parse_surgery(Document.read(path), graph)


def loads_surgery(text: str, graph: Optional[Graph] = None) -> SurgerySpec:
    return parse_surgery(Document(text), graph)
