"""Exact rational linear algebra and linear programming."""

from .matrix import ONE, ZERO, Matrix, Rational, Vector, det, dot, is_zero_vector, nullspace, rank, rref, to_rational, vector
from .simplex import CellResult, CellSpec, LinearProgram, LpResult, cell_feasible_dim, satisfies, sign_of

__all__ = [
    "Rational",
    "Vector",
    "ZERO",
    "ONE",
    "Matrix",
    "to_rational",
    "vector",
    "dot",
    "rref",
    "rank",
    "nullspace",
    "det",
    "is_zero_vector",
    "LinearProgram",
    "LpResult",
    "CellSpec",
    "CellResult",
    "cell_feasible_dim",
    "satisfies",
    "sign_of",
]
