"""Projective plane geometry and conditional systems."""

from .conditions import (
    AuxDefinition,
    Coincide,
    Collinear,
    ConditionSystem,
    ElementaryCondition,
    Evaluation,
    Intersection,
    collinearity_polynomial,
    concurrency_det,
    conditional_number,
    conic_det,
    evaluate_system,
    geometric_complexity,
)
from .construct import construct_configuration, constructive_plan
from .library import CONDITION_LIBRARY, library_system
from .projective import (
    CommonLine,
    Line,
    Point,
    ProjPoint,
    Undefined,
    collinear,
    intersection_symbol,
    line_through,
    meet,
)

__all__ = [
    "ProjPoint",
    "Line",
    "Point",
    "CommonLine",
    "Undefined",
    "line_through",
    "meet",
    "collinear",
    "intersection_symbol",
    "Coincide",
    "Collinear",
    "Intersection",
    "ElementaryCondition",
    "AuxDefinition",
    "ConditionSystem",
    "Evaluation",
    "evaluate_system",
    "conditional_number",
    "geometric_complexity",
    "conic_det",
    "concurrency_det",
    "collinearity_polynomial",
    "construct_configuration",
    "constructive_plan",
    "CONDITION_LIBRARY",
    "library_system",
]
