"""Constructive sampling of configurations that satisfy a condition system.

Only systems that can be built by ruler constructions are sampled: the base
points are placed one at a time, each either free, on a line through
already placed points, at the meet of two such lines, or on a copy of an
existing point. Conic systems are sampled by fitting a conic through the
points fixed first and placing the rest by second intersection. Anything
that would need an existential search raises
:class:`~tensegrity_strata.exceptions.NotConstructibleError`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Optional, Union

from ..exact.matrix import Matrix, nullspace
from ..exceptions import NotConstructibleError
from ..sampling import Lcg64
from .conditions import Coincide, Collinear, ConditionSystem, ElementaryCondition, Intersection, evaluate_system
from .projective import CommonLine, Line, Point, ProjPoint, Undefined, cross, intersection_symbol, line_through, meet

logger = logging.getLogger(__name__)

POINT_SPAN = 1000
ATTEMPTS = 50


@dataclass(frozen=True)
class LineConstraint:
    """The point lies on the line through points ``a`` and ``b``."""

    a: int
    b: int


@dataclass(frozen=True)
class CopyConstraint:
    """The point equals point ``a`` or the symbol of ``source``."""

    a: Optional[int] = None
    source: Optional[Intersection] = None


Constraint = Union[LineConstraint, CopyConstraint]
Plan = list[tuple[int, list[Constraint]]]


def _steps(system: ConditionSystem, order: tuple[int, ...]) -> dict[int, int]:
    step = {b: s for s, b in enumerate(order)}
    for t, aux in enumerate(system.auxiliaries, start=1):
        step[system.base_count + t] = max(step[i] for i in aux.indices)
    return step


def _constraint_for(cond: ElementaryCondition, b: int) -> Optional[Constraint]:
    if isinstance(cond, Collinear):
        others = [i for i in cond.indices if i != b]
        if len(others) != 2:
            return None
        return LineConstraint(*others)
    if isinstance(cond, Coincide):
        other = cond.j if cond.i == b else cond.i
        return CopyConstraint(a=other)
    if cond.i == b and b not in cond.indices[1:]:
        return CopyConstraint(source=cond)
    return None


def _plan(system: ConditionSystem, order: tuple[int, ...]) -> Optional[Plan]:
    step = _steps(system, order)
    constraints: dict[int, list[Constraint]] = {b: [] for b in order}
    for cond in system.conditions:
        last = max(step[i] for i in cond.indices)
        b = order[last]
        if b not in cond.indices:
            return None
        if any(step[i] == last for i in cond.indices if i != b):
            return None
        constraint = _constraint_for(cond, b)
        if constraint is None:
            return None
        constraints[b].append(constraint)
    for b, cs in constraints.items():
        copies = sum(isinstance(c, CopyConstraint) for c in cs)
        if copies > 1 or (copies == 1 and len(cs) > 1) or len(cs) > 2:
            return None
    return [(b, constraints[b]) for b in order]


def constructive_plan(system: ConditionSystem) -> Plan:
    """First placement order, in lexicographic permutation order, that works."""
    for order in permutations(range(1, system.base_count + 1)):
        plan = _plan(system, order)
        if plan is not None:
            return plan
    raise NotConstructibleError(f"{system.name} has no ruler construction order")


def _random_point(rng: Lcg64) -> ProjPoint:
    return ProjPoint(rng.randint(-POINT_SPAN, POINT_SPAN), rng.randint(-POINT_SPAN, POINT_SPAN))


def _random_point_on(line: Line, rng: Lcg64) -> Optional[ProjPoint]:
    for _ in range(10):
        other = (rng.randint(-POINT_SPAN, POINT_SPAN), rng.randint(-POINT_SPAN, POINT_SPAN), rng.randint(-POINT_SPAN, POINT_SPAN))
        c = cross(line.coeffs, other)
        if c != (0, 0, 0) and c[2] != 0:
            return ProjPoint(*c)
    return None


class _Builder:
    """Entities of one construction attempt, resolved as points are placed."""

    def __init__(self, system: ConditionSystem):
        self.system = system
        self.entities: dict[int, Union[ProjPoint, CommonLine, Undefined]] = {}

    def point(self, index: int) -> Optional[ProjPoint]:
        e = self.entities.get(index)
        return e if isinstance(e, ProjPoint) else None

    def place(self, index: int, p: ProjPoint) -> None:
        self.entities[index] = p
        self._resolve()

    def _resolve(self) -> None:
        for t, aux in enumerate(self.system.auxiliaries, start=1):
            own = self.system.base_count + t
            if own in self.entities or any(i not in self.entities for i in aux.indices):
                continue
            defining = [self.point(i) for i in aux.indices]
            if any(p is None for p in defining):
                self.entities[own] = Undefined("defined from a non-point")
                continue
            symbol = intersection_symbol(*defining)
            self.entities[own] = symbol.point if isinstance(symbol, Point) else symbol

    def base(self) -> list[ProjPoint]:
        return [self.entities[b] for b in range(1, self.system.base_count + 1)]


def _place_constrained(builder: _Builder, constraints: list[Constraint], rng: Lcg64) -> Optional[ProjPoint]:
    if not constraints:
        return _random_point(rng)
    first = constraints[0]
    if isinstance(first, CopyConstraint):
        if first.a is not None:
            target = builder.entities.get(first.a)
        else:
            defining = [builder.point(i) for i in first.source.indices[1:]]
            if any(p is None for p in defining):
                return None
            symbol = intersection_symbol(*defining)
            target = symbol.point if isinstance(symbol, Point) else symbol
        if isinstance(target, CommonLine):
            return _random_point_on(target.line, rng)
        if isinstance(target, ProjPoint) and target.is_affine:
            return target
        return None

    lines: list[Line] = []
    for c in constraints:
        a, b = builder.point(c.a), builder.point(c.b)
        if a is None or b is None or a == b:
            return None
        lines.append(line_through(a, b))
    if len(lines) == 1:
        return _random_point_on(lines[0], rng)
    result = meet(lines[0], lines[1])
    if isinstance(result, CommonLine):
        return _random_point_on(result.line, rng)
    return result if result.is_affine else None


def _linear_attempt(system: ConditionSystem, plan: Plan, rng: Lcg64) -> Optional[list[ProjPoint]]:
    builder = _Builder(system)
    for b, constraints in plan:
        p = _place_constrained(builder, constraints, rng)
        if p is None:
            return None
        builder.place(b, p)
    return builder.base()


def _aux_base_support(system: ConditionSystem, index: int) -> set[int]:
    if system.is_base(index):
        return {index}
    aux = system.auxiliaries[index - system.base_count - 1]
    support: set[int] = set()
    for i in aux.indices:
        support |= _aux_base_support(system, i)
    return support


def _fit_conic(points: list[tuple[Fraction, Fraction]]) -> Optional[tuple[Fraction, ...]]:
    rows = [[x * x, x * y, y * y, x, y, Fraction(1)] for x, y in points]
    basis = nullspace(Matrix.from_rows(rows))
    return basis[0] if len(basis) == 1 else None


def _second_intersection(conic: tuple[Fraction, ...], anchor: tuple[Fraction, Fraction], rng: Lcg64) -> Optional[ProjPoint]:
    a, b, c, d, e, _ = conic
    ax, ay = anchor
    gx, gy = 2 * a * ax + b * ay + d, b * ax + 2 * c * ay + e
    for _ in range(10):
        ux, uy = rng.randint(-POINT_SPAN, POINT_SPAN), rng.randint(-POINT_SPAN, POINT_SPAN)
        quad = a * ux * ux + b * ux * uy + c * uy * uy
        lin = gx * ux + gy * uy
        if quad == 0 or lin == 0:
            continue
        s = -lin / quad
        return ProjPoint(ax + s * ux, ay + s * uy)
    return None


def _conic_attempt(system: ConditionSystem, rng: Lcg64) -> Optional[list[ProjPoint]]:
    builder = _Builder(system)
    conic = list(system.conic_points or ())
    first: list[int] = []
    for idx in conic:
        if not system.is_base(idx):
            first.extend(sorted(_aux_base_support(system, idx)))
    for b in dict.fromkeys(first):
        builder.place(b, _random_point(rng))

    fixed = [i for i in conic if i in builder.entities]
    for i in fixed:
        p = builder.point(i)
        if p is None or not p.is_affine:
            return None
    free = [i for i in conic if i not in builder.entities]
    while len(fixed) < 5:
        b = free.pop(0)
        builder.place(b, _random_point(rng))
        fixed.append(b)

    coeffs = _fit_conic([builder.point(i).affine() for i in fixed])
    if coeffs is None:
        return None
    anchor = builder.point(fixed[0]).affine()
    for b in free:
        p = _second_intersection(coeffs, anchor, rng)
        if p is None:
            return None
        builder.place(b, p)
    for b in range(1, system.base_count + 1):
        if b not in builder.entities:
            builder.place(b, _random_point(rng))
    return builder.base()


def _check_conic_system(system: ConditionSystem) -> None:
    conic = set(system.conic_points or ())
    pinned = {i for i in conic if not system.is_base(i)}
    for idx in list(pinned):
        pinned |= _aux_base_support(system, idx) & conic
    if len(pinned) > 5:
        raise NotConstructibleError(f"{system.name} fixes more than five conic points in advance")


def construct_configuration(system: ConditionSystem, rng: Lcg64, attempts: int = ATTEMPTS) -> list[ProjPoint]:
    """Affine base points satisfying ``system``, verified exactly."""
    plan: Optional[Plan] = None
    if system.conic_points is not None:
        _check_conic_system(system)
    else:
        plan = constructive_plan(system)

    for attempt in range(1, attempts + 1):
        if plan is None:
            base = _conic_attempt(system, rng)
        else:
            base = _linear_attempt(system, plan, rng)
        if base is None or not all(p.is_affine for p in base):
            continue
        if evaluate_system(system, base).satisfied:
            logger.debug("constructed %s on attempt %d", system.name, attempt)
            return base
    raise NotConstructibleError(f"no satisfying configuration for {system.name} after {attempts} attempts")
