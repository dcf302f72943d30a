"""Utility functions for tensegrity-strata."""

import hashlib
from fractions import Fraction
from typing import Iterable


def text_digest(text: str) -> str:
    """SHA-256 hex digest of a canonical text form."""
    return hashlib.sha256(text.encode()).hexdigest()


def format_rational(value: Fraction | int) -> str:
    """Render an exact rational as ``p/q`` or an integer, never a decimal."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(values: Iterable[Fraction | int]) -> str:
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


def edge_label(edge: tuple[int, int]) -> str:
    return f"{edge[0]}-{edge[1]}"
