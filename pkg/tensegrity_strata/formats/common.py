"""JSON plumbing shared by the file formats.

Exact values are written as strings, ``"p/q"`` or ``"n"``. Plain JSON
integers are accepted too. Anything that looks like floating point is
rejected with the line and column where it appears.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from ..exceptions import ParseError

RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
FLOAT_RE = re.compile(r"[-+]?(\d+\.\d*|\.\d+|\d+[eE][-+]?\d+|\d+\.\d*[eE][-+]?\d+)")


class _Float(str):
    """Raw text of a JSON number with a fraction or exponent."""


def _line_column(text: str, offset: int) -> tuple[Optional[int], Optional[int]]:
    if offset < 0:
        return None, None
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _position(text: str, needle: str) -> tuple[Optional[int], Optional[int]]:
    return _line_column(text, text.find(needle))


def _skip_value(text: str, start: int) -> int:
    """Offset just past the JSON value that begins at ``start``."""
    depth = 0
    j = start
    while j < len(text):
        c = text[j]
        if c == '"':
            j += 1
            while j < len(text) and text[j] != '"':
                j += 2 if text[j] == "\\" else 1
        elif c in "[{":
            depth += 1
        elif c in "]}":
            if depth == 0:
                return j
            depth -= 1
        elif c == "," and depth == 0:
            return j
        j += 1
        if depth == 0 and text[start] in '"[{':
            return j
    return j


def _element_offset(text: str, key: str, index: int) -> int:
    """Offset of item ``index`` (from 0) of the array stored under ``key``, or -1."""
    at = text.find(f'"{key}"')
    if at < 0:
        return -1
    j = text.find("[", at)
    if j < 0:
        return -1
    j += 1
    count = 0
    while j < len(text):
        c = text[j]
        if c in " \t\r\n,":
            j += 1
        elif c == "]":
            return -1
        elif count == index:
            return j
        else:
            j = _skip_value(text, j)
            count += 1
    return -1


class Document:
    """Parsed JSON text that can point back at its source positions."""

    def __init__(self, text: str, path: Optional[str] = None):
        self.text = text
        self.path = path
        try:
            self.data = json.loads(text, parse_float=_Float)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, path, e.lineno, e.colno) from None

    @classmethod
    def read(cls, path: str | Path) -> "Document":
        p = Path(path)
        try:
            text = p.read_text(encoding="utf-8")
        except OSError as e:
            raise ParseError(f"cannot read {p}: {e.strerror}", str(p)) from None
        return cls(text, str(p))

    def error(self, message: str, token: Optional[str] = None) -> ParseError:
        line, column = _position(self.text, token) if token else (None, None)
        return ParseError(message, self.path, line, column)

    def item_error(self, message: str, key: str, index: int) -> ParseError:
        """Error pointing at item ``index`` (from 0) of the array under ``key``."""
        line, column = _line_column(self.text, _element_offset(self.text, key, index))
        return ParseError(message, self.path, line, column)

    def rational(self, value: Any, what: str) -> Fraction:
        if isinstance(value, _Float):
            raise self.error(f"floating point forbidden in {what}: {value}", str(value))
        if isinstance(value, bool):
            raise self.error(f"{what} must be a rational, got {value!r}")
        if isinstance(value, int):
            return Fraction(value)
        if not isinstance(value, str):
            raise self.error(f"{what} must be a rational string, got {value!r}")
        token = value.strip()
        if FLOAT_RE.fullmatch(token):
            raise self.error(f"floating point forbidden in {what}: {value}", f'"{value}"')
        if not RATIONAL_RE.match(token):
            raise self.error(f"{what} is not a rational: {value!r}", f'"{value}"')
        _, _, den = token.partition("/")
        if den and int(den) == 0:
            raise self.error(f"zero denominator in {what}", f'"{value}"')
        return Fraction(token)

    def integer(self, value: Any, what: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.error(f"{what} must be an integer, got {value!r}")
        return value

    def field(self, data: Any, key: str, kind: type, required: bool = True, default: Any = None) -> Any:
        if not isinstance(data, dict):
            raise self.error(f"expected an object holding {key!r}")
        if key not in data:
            if required:
                raise self.error(f"missing field {key!r}")
            return default
        value = data[key]
        if kind is int:
            return self.integer(value, key)
        if kind is object:
            return value
        if not isinstance(value, kind) or isinstance(value, _Float):
            raise self.error(f"field {key!r} must be {kind.__name__}", f'"{key}"')
        return value

    def pair(self, value: Any, what: str) -> tuple[int, int]:
        if not isinstance(value, list) or len(value) != 2:
            raise self.error(f"{what} must be a pair [i, j], got {value!r}")
        return self.integer(value[0], what), self.integer(value[1], what)


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"
