"""Stratum symbols and fingerprints."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..exceptions import DimensionError
from ..utils import text_digest
from .framework import SignMatrix


@dataclass(frozen=True, order=True)
class StratumSymbol:
    """The couple (M, i): a realized sign matrix and the dimension of its cell."""

    m: SignMatrix
    i: int

    def __post_init__(self) -> None:
        if not 0 <= self.i <= self.m.n * self.m.n:
            raise ValueError(f"stratum dimension {self.i} out of range")

    def sort_key(self) -> tuple[tuple[int, ...], int]:
        return (self.m.signs, self.i)

    def render(self) -> str:
        return f"{self.m.pattern() or '-'} {self.i}"


@dataclass(frozen=True)
class Fingerprint:
    """The set S(G,P) of realized stratum symbols."""

    symbols: frozenset[StratumSymbol]

    def __post_init__(self) -> None:
        sizes = {(s.m.n, s.m.edges) for s in self.symbols}
        if len(sizes) > 1:
            raise DimensionError("fingerprint mixes sign matrices of different graphs")

    @classmethod
    def of(cls, symbols: Iterable[StratumSymbol]) -> "Fingerprint":
        return cls(frozenset(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.symbols

    def __iter__(self):
        return iter(self.ordered())

    def ordered(self) -> list[StratumSymbol]:
        return sorted(self.symbols, key=StratumSymbol.sort_key)

    def dimension_of(self, m: SignMatrix) -> int | None:
        return next((s.i for s in self.symbols if s.m == m), None)

    def canonical(self) -> str:
        """Deterministic text form: one ``pattern dim`` line per symbol."""
        ordered = self.ordered()
        if not ordered:
            return ""
        m = ordered[0].m
        header = f"n={m.n} edges=" + ",".join(f"{i}{j}" if m.n < 10 else f"{i}.{j}" for i, j in m.edges)
        return "\n".join([header, *(s.render() for s in ordered)]) + "\n"

    def digest(self) -> str:
        return text_digest(self.canonical())
