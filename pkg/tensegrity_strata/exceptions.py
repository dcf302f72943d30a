"""Custom exceptions for tensegrity-strata.

This module defines the exception hierarchy for tensegrity-strata, allowing
users to catch and handle library-specific errors.

Semantic negatives (an unsatisfied condition system, a failed catalog claim,
two fibers that are not equivalent) are returned as values, never raised.

Example:
    ```python
    from tensegrity_strata.exceptions import TensegrityError, ParseError

    try:
        framework = load_framework(path)
    except ParseError as e:
        print(f"{e.path}:{e.line}:{e.column}: {e}")
    ```
"""

from __future__ import annotations

from typing import Optional


class TensegrityError(Exception):
    """Base exception for all tensegrity-strata errors.

    All exceptions raised by tensegrity-strata inherit from this class,
    making it easy to catch all library-specific errors.
    """

    pass


class ConfigError(TensegrityError):
    """Error related to configuration loading or validation.

    Raised when:
    - A configuration value has the wrong type
    - A configuration value is out of range
    """

    pass


class InputError(TensegrityError):
    """Error in user-supplied input.

    Raised when:
    - An input file has the wrong structure
    - A rational is written in floating point notation
    """

    pass


class ParseError(InputError):
    """Input file could not be parsed.

    Carries the file path and, when known, the 1-based line and column of
    the offending token.
    """

    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        super().__init__(message)
        self.path = path
        self.line = line
        self.column = column

    def __str__(self) -> str:
        message = super().__str__()
        if self.line is not None:
            return f"{message} (line {self.line}, column {self.column})"
        return message


class GraphError(TensegrityError):
    """Error related to graph structure.

    Raised when:
    - An edge is a loop or is listed twice
    - A vertex index is outside 1..n
    - A removed edge does not exist
    """

    pass


class DimensionError(TensegrityError):
    """Shapes of exact objects do not fit together.

    Raised when:
    - A determinant is requested for a non-square matrix
    - A point has the wrong number of coordinates
    - A stress is keyed by edges of another graph
    """

    pass


class GeneralPositionError(TensegrityError):
    """A configuration is not in general position.

    Raised when d+1 of the points lie in a common hyperplane where the
    operation requires otherwise (atoms, decompositions).
    """

    pass


class NotSelfStressError(TensegrityError):
    """A stress violates the equilibrium condition.

    Carries the first vertex with a nonzero residual and that residual.
    """

    def __init__(self, vertex: int, residual: tuple):
        rendered = ", ".join(str(c) for c in residual)
        super().__init__(f"not a self-stress: residual at v{vertex} is ({rendered})")
        self.vertex = vertex
        self.residual = residual


class PreconditionError(TensegrityError):
    """A named hypothesis of an operation is violated.

    The ``name`` attribute identifies the hypothesis, for example
    ``collinear(p,v1,v2)`` or ``dim W(H) = 1``.
    """

    def __init__(self, name: str, message: Optional[str] = None):
        super().__init__(message or f"precondition failed: {name}")
        self.name = name


class GeometryError(TensegrityError):
    """Projective construction is undefined.

    Raised when:
    - A line through two coincident points is requested
    - Two identical lines are intersected outside the symbol semantics
    """

    pass


class NotConstructibleError(TensegrityError):
    """A condition system cannot be sampled constructively.

    Raised for systems whose satisfying configurations would require solving
    an existential problem instead of intersecting lines.
    """

    pass
