"""Points and lines of the rational projective plane.

Points and lines are homogeneous triples. Both are stored in canonical form,
with the last nonzero coordinate scaled to 1, so ``==`` is projective
equality. Points with ``z == 0`` lie on the line at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from ..exact.matrix import Matrix, det, to_rational
from ..exceptions import DimensionError, GeometryError

Triple = tuple[Fraction, Fraction, Fraction]


def _canonical(coords: Sequence[int | Fraction]) -> Triple:
    x, y, z = (to_rational(c) for c in coords)
    lead = z if z != 0 else y if y != 0 else x
    if lead == 0:
        raise GeometryError("homogeneous coordinates are all zero")
    return (x / lead, y / lead, z / lead)


def cross(u: Sequence[Fraction], v: Sequence[Fraction]) -> Triple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True)
class ProjPoint:
    """A point ``(x : y : z)``."""

    coords: Triple

    def __init__(self, x: int | Fraction, y: int | Fraction, z: int | Fraction = 1):
        object.__setattr__(self, "coords", _canonical((x, y, z)))

    @classmethod
    def of(cls, coords: Sequence[int | Fraction | str]) -> "ProjPoint":
        """From affine ``(x, y)`` or homogeneous ``(x, y, z)`` coordinates."""
        if len(coords) == 2:
            return cls(to_rational(coords[0]), to_rational(coords[1]))
        if len(coords) == 3:
            return cls(*(to_rational(c) for c in coords))
        raise DimensionError(f"a plane point needs 2 or 3 coordinates, got {len(coords)}")

    @property
    def is_affine(self) -> bool:
        return self.coords[2] != 0

    def affine(self) -> tuple[Fraction, Fraction]:
        if not self.is_affine:
            raise GeometryError(f"{self} lies on the line at infinity")
        return (self.coords[0], self.coords[1])

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Line:
    """A line ``a x + b y + c z = 0``."""

    coeffs: Triple

    def __init__(self, a: int | Fraction, b: int | Fraction, c: int | Fraction):
        object.__setattr__(self, "coeffs", _canonical((a, b, c)))

    def contains(self, p: ProjPoint) -> bool:
        return sum(a * x for a, x in zip(self.coeffs, p.coords)) == 0

    def __str__(self) -> str:
        return "[" + " : ".join(str(c) for c in self.coeffs) + "]"


@dataclass(frozen=True)
class Point:
    """Intersection symbol resolved to a single point."""

    point: ProjPoint


@dataclass(frozen=True)
class CommonLine:
    """Both defining lines coincide; the symbol stands for any point on it."""

    line: Line


@dataclass(frozen=True)
class Undefined:
    """A defining pair coincides, so one of the lines does not exist."""

    reason: str


Symbol = Union[Point, CommonLine, Undefined]


def line_through(a: ProjPoint, b: ProjPoint) -> Line:
    c = cross(a.coords, b.coords)
    if c == (0, 0, 0):
        raise GeometryError(f"line undefined: {a} and {b} coincide")
    return Line(*c)


def meet(l1: Line, l2: Line) -> Union[ProjPoint, CommonLine]:
    """Intersection of two lines; identical lines give :class:`CommonLine`."""
    c = cross(l1.coeffs, l2.coeffs)
    if c == (0, 0, 0):
        return CommonLine(l1)
    return ProjPoint(*c)


def collinear(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> bool:
    return det(Matrix.from_rows([a.coords, b.coords, c.coords])) == 0


def intersection_symbol(pj: ProjPoint, pj2: ProjPoint, pk: ProjPoint, pk2: ProjPoint) -> Symbol:
    """The symbol ``[pj, pj2; pk, pk2]``: lines pj-pj2 and pk-pk2 intersected."""
    if pj == pj2:
        return Undefined(f"{pj} repeated in the first pair")
    if pk == pk2:
        return Undefined(f"{pk} repeated in the second pair")
    result = meet(line_through(pj, pj2), line_through(pk, pk2))
    if isinstance(result, CommonLine):
        return result
    return Point(result)
