"""Condition-system and point files.

A system file either names a library system, ``{"library": "conic_123456"}``,
or spells one out::

    {
      "name": "concurrent",
      "base_count": 6,
      "auxiliaries": [{"name": "q7", "defining": [1, 2, 3, 4]}],
      "conditions": [{"type": "collinear", "indices": [7, 5, 6]}]
    }

Condition types are ``eq`` (two indices), ``collinear`` (three) and
``intersect`` (five, ``p_i = [p_j, p_j2; p_k, p_k2]``). A points file holds
``{"points": [[x, y], [x, y, z], ...]}``.
"""

from __future__ import annotations

from pathlib import Path

from ..exceptions import InputError
from ..geometry import (
    AuxDefinition,
    Coincide,
    Collinear,
    ConditionSystem,
    ElementaryCondition,
    Intersection,
    ProjPoint,
    library_system,
)
from ..utils import format_rational
from .common import Document, dumps

CONDITION_ARITY = {"eq": 2, "collinear": 3, "intersect": 5}


def _condition(doc: Document, raw: dict) -> ElementaryCondition:
    kind = doc.field(raw, "type", str)
    if kind not in CONDITION_ARITY:
        raise doc.error(f"unknown condition type {kind!r}", f'"{kind}"')
    indices = [doc.integer(i, "condition index") for i in doc.field(raw, "indices", list)]
    if len(indices) != CONDITION_ARITY[kind]:
        raise doc.error(f"{kind} takes {CONDITION_ARITY[kind]} indices, got {len(indices)}")
    if kind == "eq":
        return Coincide(*indices)
    if kind == "collinear":
        return Collinear(*indices)
    return Intersection(*indices)


def parse_condition_system(doc: Document) -> ConditionSystem:
    data = doc.data
    if isinstance(data, dict) and "library" in data:
        name = doc.field(data, "library", str)
        try:
            return library_system(name)
        except KeyError:
            raise InputError(f"unknown library system: {name}") from None

    auxiliaries = []
    for raw in doc.field(data, "auxiliaries", list, required=False, default=[]):
        defining = [doc.integer(i, "defining index") for i in doc.field(raw, "defining", list)]
        if len(defining) != 4:
            raise doc.error(f"an auxiliary takes 4 defining indices, got {len(defining)}")
        auxiliaries.append(AuxDefinition(*defining, name=doc.field(raw, "name", str, required=False, default="")))
    conic = doc.field(data, "conic_points", list, required=False)
    return ConditionSystem(
        name=doc.field(data, "name", str, required=False, default="system"),
        base_count=doc.field(data, "base_count", int),
        auxiliaries=tuple(auxiliaries),
        conditions=tuple(_condition(doc, c) for c in doc.field(data, "conditions", list)),
        kind=doc.field(data, "kind", str, required=False, default=""),
        description=doc.field(data, "description", str, required=False, default=""),
        conic_points=None if conic is None else tuple(doc.integer(i, "conic point") for i in conic),
    )


def load_condition_system(path: str | Path) -> ConditionSystem:
    return parse_condition_system(Document.read(path))


def loads_condition_system(text: str) -> ConditionSystem:
    return parse_condition_system(Document(text))


def _condition_data(cond: ElementaryCondition) -> dict:
    kind = {Coincide: "eq", Collinear: "collinear", Intersection: "intersect"}[type(cond)]
    return {"type": kind, "indices": list(cond.indices)}


def dumps_condition_system(system: ConditionSystem) -> str:
    data: dict = {
        "name": system.name,
        "base_count": system.base_count,
        "auxiliaries": [{"name": a.name, "defining": list(a.indices)} for a in system.auxiliaries],
        "conditions": [_condition_data(c) for c in system.conditions],
    }
    if system.kind:
        data["kind"] = system.kind
    if system.description:
        data["description"] = system.description
    if system.conic_points is not None:
        data["conic_points"] = list(system.conic_points)
    return dumps(data)


def parse_points(doc: Document) -> list[ProjPoint]:
    points = []
    for index, raw in enumerate(doc.field(doc.data, "points", list), start=1):
        if not isinstance(raw, list) or len(raw) not in (2, 3):
            raise doc.error(f"point p{index} needs 2 or 3 coordinates")
        coords = [doc.rational(c, f"coordinate of p{index}") for c in raw]
        if all(c == 0 for c in coords):
            raise doc.error(f"point p{index} has all coordinates zero")
        points.append(ProjPoint.of(coords))
    return points


def load_points(path: str | Path) -> list[ProjPoint]:
    return parse_points(Document.read(path))


def loads_points(text: str) -> list[ProjPoint]:
    return parse_points(Document(text))


def dumps_points(points: list[ProjPoint]) -> str:
    rows = []
    for p in points:
        coords = p.affine() if p.is_affine else p.coords
        rows.append([format_rational(c) for c in coords])
    return dumps({"points": rows})
