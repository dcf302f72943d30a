"""Elementary geometric conditions and conditional systems.

A system names base points ``1..m`` and auxiliary points ``m+1..n``, each
auxiliary defined by an intersection symbol over earlier points. Conditions
then refer to base and auxiliary points alike.

Closure semantics for the intersection symbol:

- identical defining lines make the symbol a :class:`CommonLine`; a
  condition on it holds whenever some point of that line would satisfy it;
- a coincident defining pair makes the symbol :class:`Undefined`, and any
  system touching an undefined point is unsatisfied.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from ..exact.matrix import Matrix, det
from ..exceptions import DimensionError, GeometryError, InputError
from .projective import CommonLine, Point, ProjPoint, Symbol, Undefined, collinear, intersection_symbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coincide:
    i: int
    j: int

    @property
    def indices(self) -> tuple[int, ...]:
        return (self.i, self.j)

    def __str__(self) -> str:
        return f"p{self.i} = p{self.j}"


@dataclass(frozen=True)
class Collinear:
    i: int
    j: int
    k: int

    @property
    def indices(self) -> tuple[int, ...]:
        return (self.i, self.j, self.k)

    def __str__(self) -> str:
        return f"p{self.i} v p{self.j} v p{self.k} = 0"


@dataclass(frozen=True)
class Intersection:
    """``p_i = [p_j, p_j2; p_k, p_k2]``."""

    i: int
    j: int
    j2: int
    k: int
    k2: int

    def __post_init__(self) -> None:
        if self.j == self.j2 or self.k == self.k2:
            raise InputError(f"intersection symbol with a repeated index in {self}")

    @property
    def indices(self) -> tuple[int, ...]:
        return (self.i, self.j, self.j2, self.k, self.k2)

    def __str__(self) -> str:
        return f"p{self.i} = [p{self.j}, p{self.j2}; p{self.k}, p{self.k2}]"


ElementaryCondition = Union[Coincide, Collinear, Intersection]


@dataclass(frozen=True)
class AuxDefinition:
    """Auxiliary point ``[p_j, p_j2; p_k, p_k2]``."""

    j: int
    j2: int
    k: int
    k2: int
    name: str = ""

    def __post_init__(self) -> None:
        if self.j == self.j2 or self.k == self.k2:
            raise InputError(f"auxiliary {self.name or '?'} has a repeated defining index")

    @property
    def indices(self) -> tuple[int, int, int, int]:
        return (self.j, self.j2, self.k, self.k2)


@dataclass(frozen=True)
class ConditionSystem:
    """A conditional system over ``base_count`` base points.

    Attributes:
        name: Identifier used in reports and the library.
        base_count: Number of base points.
        auxiliaries: Auxiliary definitions; auxiliary ``t`` gets index
            ``base_count + t`` (1-based) and may only use smaller indices.
        conditions: Elementary conditions over all indices.
        kind: Short description (``concurrency``, ``conic``, ``collinear``).
        conic_points: For conic systems, the six indices whose conic
            incidence the system expresses; used by the constructive sampler.
    """

    name: str
    base_count: int
    auxiliaries: tuple[AuxDefinition, ...] = ()
    conditions: tuple[ElementaryCondition, ...] = ()
    kind: str = ""
    description: str = ""
    conic_points: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.base_count < 1:
            raise InputError("a system needs at least one base point")
        for t, aux in enumerate(self.auxiliaries, start=1):
            own = self.base_count + t
            for idx in aux.indices:
                if not 1 <= idx < own:
                    raise InputError(
                        f"auxiliary p{own} refers to p{idx}, which is not an earlier point"
                    )
        total = self.total_count
        for cond in self.conditions:
            for idx in cond.indices:
                if not 1 <= idx <= total:
                    raise InputError(f"condition {cond} refers to unknown point p{idx}")
        if self.conic_points is not None and len(self.conic_points) != 6:
            raise InputError("a conic system names exactly six points")

    @property
    def total_count(self) -> int:
        return self.base_count + len(self.auxiliaries)

    @property
    def conditional_number(self) -> int:
        return len(self.auxiliaries)

    def is_base(self, index: int) -> bool:
        return index <= self.base_count


def conditional_number(system: ConditionSystem) -> int:
    return system.conditional_number


def geometric_complexity(systems: Sequence[ConditionSystem]) -> int:
    """Largest conditional number in a union of systems, as given."""
    return max((s.conditional_number for s in systems), default=0)


@dataclass
class Evaluation:
    """Result of :func:`evaluate_system`."""

    satisfied: bool
    auxiliaries: list[Symbol] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)


Entity = Union[ProjPoint, CommonLine, Undefined]


def _entity(symbol: Symbol) -> Entity:
    return symbol.point if isinstance(symbol, Point) else symbol


def _resolve(system: ConditionSystem, base: Sequence[ProjPoint], trace: list[str]) -> tuple[list[Entity], list[Symbol]]:
    entities: list[Entity] = list(base)
    symbols: list[Symbol] = []
    for t, aux in enumerate(system.auxiliaries, start=1):
        own = system.base_count + t
        defining = [entities[i - 1] for i in aux.indices]
        if all(isinstance(e, ProjPoint) for e in defining):
            symbol = intersection_symbol(*defining)
        else:
            bad = next(i for i, e in zip(aux.indices, defining) if not isinstance(e, ProjPoint))
            symbol = Undefined(f"defined from p{bad}, which is not a single point")
        if isinstance(symbol, Undefined):
            trace.append(f"p{own} undefined: {symbol.reason}")
        elif isinstance(symbol, CommonLine):
            trace.append(f"p{own} is any point of the common line {symbol.line}")
        symbols.append(symbol)
        entities.append(_entity(symbol))
    return entities, symbols


def _holds(cond: ElementaryCondition, entities: list[Entity]) -> Optional[bool]:
    """Truth of one condition; ``None`` if it touches an undefined point."""
    values = [entities[i - 1] for i in cond.indices]
    if any(isinstance(v, Undefined) for v in values):
        return None
    if isinstance(cond, Coincide):
        a, b = values
        if isinstance(a, ProjPoint) and isinstance(b, ProjPoint):
            return a == b
        if isinstance(a, CommonLine) and isinstance(b, CommonLine):
            return True
        point, line = (a, b) if isinstance(a, ProjPoint) else (b, a)
        return line.line.contains(point)
    if isinstance(cond, Collinear):
        if any(isinstance(v, CommonLine) for v in values):
            return True
        return collinear(*values)
    target, *defining = values
    if not all(isinstance(v, ProjPoint) for v in defining):
        return None
    symbol = intersection_symbol(*defining)
    if isinstance(symbol, Undefined):
        return None
    if isinstance(symbol, CommonLine):
        return True if isinstance(target, CommonLine) else symbol.line.contains(target)
    if isinstance(target, CommonLine):
        return target.line.contains(symbol.point)
    return target == symbol.point


def evaluate_system(system: ConditionSystem, base: Sequence[ProjPoint]) -> Evaluation:
    """Resolve the auxiliaries and check every condition exactly."""
    if len(base) != system.base_count:
        raise DimensionError(f"{system.name} takes {system.base_count} base points, got {len(base)}")
    trace: list[str] = []
    entities, symbols = _resolve(system, base, trace)
    satisfied = True
    for cond in system.conditions:
        verdict = _holds(cond, entities)
        if verdict is None:
            trace.append(f"{cond}: involves an undefined point")
            satisfied = False
        elif not verdict:
            trace.append(f"{cond}: fails")
            satisfied = False
        else:
            trace.append(f"{cond}: holds")
    logger.debug("system %s: satisfied=%s", system.name, satisfied)
    return Evaluation(satisfied, symbols, trace)


def _row(p: ProjPoint) -> list[Fraction]:
    x, y, z = p.coords
    return [x * x, x * y, y * y, x * z, y * z, z * z]


def conic_det(six: Sequence[ProjPoint]) -> Fraction:
    """Zero iff the six points lie on a common, possibly degenerate, conic."""
    if len(six) != 6:
        raise DimensionError(f"conic test takes 6 points, got {len(six)}")
    return det(Matrix.from_rows([_row(p) for p in six]))


def concurrency_det(six: Sequence[tuple[Fraction, Fraction]]) -> Fraction:
    """Zero iff lines v1v2, v3v4, v5v6 share a point of the projective plane."""
    if len(six) != 6:
        raise DimensionError(f"concurrency test takes 6 points, got {len(six)}")
    columns = []
    for a in range(0, 6, 2):
        (x1, y1), (x2, y2) = six[a], six[a + 1]
        if (x1, y1) == (x2, y2):
            raise GeometryError(f"line undefined: points {a + 1} and {a + 2} coincide")
        columns.append([y1 - y2, x2 - x1, x1 * y2 - x2 * y1])
    return det(Matrix.from_rows([list(r) for r in zip(*columns)]))


def collinearity_polynomial(
    a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction], c: tuple[Fraction, Fraction]
) -> Fraction:
    """``xa*yb + xb*yc + xc*ya - xa*yc - xb*ya - xc*yb``.

    Vanishes exactly when the three affine points are collinear.
    """
    (xa, ya), (xb, yb), (xc, yc) = a, b, c
    return xa * yb + xb * yc + xc * ya - xa * yc - xb * ya - xc * yb
