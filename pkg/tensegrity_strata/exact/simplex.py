"""Exact rational simplex and cell feasibility.

The solver handles programs of the form

    maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0,

so the all-slack basis is feasible and no phase 1 is needed. Pivoting uses
Bland's rule, which terminates without cycling in exact arithmetic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..exceptions import DimensionError
from .matrix import ONE, ZERO, Matrix, Vector, dot, nullspace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LpResult:
    """Outcome of :meth:`LinearProgram.solve`.

    ``dual`` is only set for optimal programs; it satisfies ``dual >= 0``,
    ``dual @ A >= c`` and ``dual @ b == value``, so it certifies that no
    primal point does better than ``value``.
    """

    status: str
    value: Optional[Fraction] = None
    primal: Vector = ()
    dual: Vector = ()
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


@dataclass
class LinearProgram:
    """Dense exact tableau for ``max c.x, A x <= b, x >= 0``."""

    a: list[list[Fraction]]
    b: list[Fraction]
    c: list[Fraction]

    def __post_init__(self) -> None:
        self.m = len(self.a)
        self.n = len(self.c)
        if len(self.b) != self.m or any(len(row) != self.n for row in self.a):
            raise DimensionError("inconsistent linear program shape")
        if any(v < 0 for v in self.b):
            raise ValueError("right-hand side must be non-negative")

    def solve(self) -> LpResult:
        m, n = self.m, self.n
        width = n + m
        tableau = [
            [*row, *(ONE if k == i else ZERO for k in range(m)), rhs]
            for i, (row, rhs) in enumerate(zip(self.a, self.b))
        ]
        reduced = [-cj for cj in self.c] + [ZERO] * m + [ZERO]
        basis = list(range(n, n + m))
        pivots = 0

        while True:
            entering = next((j for j in range(width) if reduced[j] < 0), None)
            if entering is None:
                break
            best: Optional[tuple[Fraction, int, int]] = None
            for i in range(m):
                coeff = tableau[i][entering]
                if coeff > 0:
                    candidate = (tableau[i][width] / coeff, basis[i], i)
                    if best is None or candidate < best:
                        best = candidate
            if best is None:
                logger.debug("unbounded after %d pivots", pivots)
                return LpResult(status="unbounded", pivots=pivots)
            row = best[2]
            self._pivot(tableau, reduced, row, entering)
            basis[row] = entering
            pivots += 1

        primal = [ZERO] * n
        for i, var in enumerate(basis):
            if var < n:
                primal[var] = tableau[i][width]
        dual = tuple(reduced[n:n + m])
        logger.debug("optimal value %s after %d pivots", reduced[width], pivots)
        return LpResult(
            status="optimal",
            value=reduced[width],
            primal=tuple(primal),
            dual=dual,
            pivots=pivots,
        )

    @staticmethod
    def _pivot(tableau: list[list[Fraction]], reduced: list[Fraction], row: int, col: int) -> None:
        piv = tableau[row][col]
        tableau[row] = [v / piv for v in tableau[row]]
        pivot_row = tableau[row]
        for i, other in enumerate(tableau):
            if i == row or other[col] == 0:
                continue
            factor = other[col]
            tableau[i] = [a - factor * b for a, b in zip(other, pivot_row)]
        factor = reduced[col]
        if factor != 0:
            reduced[:] = [a - factor * b for a, b in zip(reduced, pivot_row)]


@dataclass(frozen=True)
class CellSpec:
    """A relatively open polyhedral cone cut out by linear functionals.

    Attributes:
        ambient_dim: Number of coordinates.
        equalities: Functionals forced to 0.
        positives: Functionals forced > 0.
        negatives: Functionals forced < 0.
    """

    ambient_dim: int
    equalities: tuple[Vector, ...] = ()
    positives: tuple[Vector, ...] = ()
    negatives: tuple[Vector, ...] = ()

    def __post_init__(self) -> None:
        for functional in (*self.equalities, *self.positives, *self.negatives):
            if len(functional) != self.ambient_dim:
                raise DimensionError(
                    f"functional with {len(functional)} coefficients in ambient dimension {self.ambient_dim}"
                )


@dataclass(frozen=True)
class CellResult:
    """Feasibility verdict for a :class:`CellSpec`.

    ``witness`` is an exact interior point when feasible. ``certificate`` is
    the dual of the margin program: for an infeasible cell it proves the
    margin cannot be positive.
    """

    feasible: bool
    dim: Optional[int]
    witness: Optional[Vector] = None
    certificate: Vector = field(default=())

    def __iter__(self):
        yield self.feasible
        yield self.dim


def cell_feasible_dim(cell: CellSpec) -> CellResult:
    """Decide whether a cell is nonempty and return the dimension of its span.

    Equalities are eliminated by parametrizing their null space. The strict
    constraints then read ``g.y > 0``; a margin ``t <= 1`` is maximized
    subject to ``g.y >= t`` and the cell is nonempty iff the optimum is
    positive.
    """
    k = cell.ambient_dim
    if cell.equalities:
        basis = nullspace(Matrix.from_rows(list(cell.equalities), cols=k))
    else:
        basis = [tuple(ONE if i == j else ZERO for i in range(k)) for j in range(k)]
    strict = [tuple(f) for f in cell.positives] + [tuple(-x for x in f) for f in cell.negatives]
    free_dim = len(basis)

    if not strict:
        return CellResult(True, free_dim, witness=(ZERO,) * k)

    projected = [[dot(g, z) for z in basis] for g in strict]

    # variables: y+ (free_dim), y- (free_dim), t
    a: list[list[Fraction]] = []
    for g in projected:
        a.append([-x for x in g] + list(g) + [ONE])
    a.append([ZERO] * (2 * free_dim) + [ONE])
    b = [ZERO] * len(projected) + [ONE]
    c = [ZERO] * (2 * free_dim) + [ONE]
    result = LinearProgram(a, b, c).solve()
    if not result.optimal or result.value is None:
        # the margin is bounded by 1, so this only happens on a solver defect
        raise RuntimeError(f"margin program ended with status {result.status}")

    if result.value <= 0:
        return CellResult(False, None, certificate=result.dual)

    coeffs = [result.primal[i] - result.primal[free_dim + i] for i in range(free_dim)]
    witness = tuple(
        sum((coeffs[j] * basis[j][i] for j in range(free_dim)), ZERO) for i in range(k)
    )
    return CellResult(True, free_dim, witness=witness, certificate=result.dual)


def sign_of(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def satisfies(cell: CellSpec, point: Sequence[Fraction]) -> bool:
    """Exact membership test used by sampling oracles."""
    return (
        all(dot(f, point) == 0 for f in cell.equalities)
        and all(dot(f, point) > 0 for f in cell.positives)
        and all(dot(f, point) < 0 for f in cell.negatives)
    )
