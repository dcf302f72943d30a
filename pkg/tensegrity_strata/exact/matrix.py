"""Exact rational matrices and fraction-exact elimination.

All scalars are :class:`fractions.Fraction`. Nothing in this module touches
floating point, so rank, sign and null-space decisions are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..exceptions import DimensionError

Rational = Fraction
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value: int | Fraction | str) -> Fraction:
    """Coerce an exact scalar to a Fraction.

    Floats are rejected: they would silently carry binary rounding into
    decisions that must be exact.
    """
    if isinstance(value, float):
        raise TypeError("floating point values are not exact rationals")
    return Fraction(value)


def vector(values: Iterable[int | Fraction | str]) -> Vector:
    return tuple(to_rational(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dot product of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


@dataclass(frozen=True)
class Matrix:
    """Row-major exact matrix.

    Attributes:
        rows: Number of rows.
        cols: Number of columns.
        entries: ``rows * cols`` Fractions in row-major order.
    """

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("matrix shape must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | Fraction | str]], cols: int | None = None) -> "Matrix":
        """Build a matrix from nested rows.

        ``cols`` is only needed for a matrix with zero rows.
        """
        if not rows:
            return cls(0, cols or 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        if cols is not None and cols != width:
            raise DimensionError(f"expected {cols} columns, got {width}")
        return cls(len(rows), width, tuple(to_rational(v) for r in rows for v in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def as_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix-vector product ``m @ v``."""
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.cols} columns")
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return Matrix.from_rows(
            [[dot(self.row(i), other.column(j)) for j in range(other.cols)] for i in range(self.rows)],
            cols=other.cols,
        )


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.

    Returns the nonzero reduced rows and the pivot column of each, in
    ascending order.
    """
    work = m.as_rows()
    pivots: list[int] = []
    piv_r = 0
    for piv_c in range(m.cols):
        for i_row in range(piv_r, m.rows):
            if work[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            work[piv_r], work[i_row] = work[i_row], work[piv_r]
        fp = work[piv_r][piv_c]
        work[piv_r] = [v / fp for v in work[piv_r]]
        for r in range(m.rows):
            if r == piv_r:
                continue
            fr = work[r][piv_c]
            if fr == 0:
                continue
            work[r] = [a - fr * b for a, b in zip(work[r], work[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == m.rows:
            break
    return work[:piv_r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix) -> list[Vector]:
    """Deterministic basis of ``{v : m v = 0}``.

    Free variables are taken in ascending column order; each basis vector
    sets its free variable to 1, the other free variables to 0, and reads
    the pivot variables off the reduced rows.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for row, piv_c in zip(reduced, pivots):
            v[piv_c] = -row[free]
        basis.append(tuple(v))
    return basis


def det(m: Matrix) -> Fraction:
    """Exact determinant by fraction-exact elimination with row swaps."""
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    work = m.as_rows()
    result = ONE
    for c in range(n):
        pivot = next((r for r in range(c, n) if work[r][c] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            result = -result
        fp = work[c][c]
        result *= fp
        for r in range(c + 1, n):
            fr = work[r][c]
            if fr == 0:
                continue
            ratio = fr / fp
            work[r] = [a - ratio * b for a, b in zip(work[r], work[c])]
    return result


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)
