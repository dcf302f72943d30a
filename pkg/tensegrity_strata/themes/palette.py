"""SVG palettes for rendered tensegrities.

Struts are red and solid, cables blue and dashed, and zero-tension edges
gray in every palette; palettes only shift shades and the background.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..exceptions import ConfigError


@dataclass(frozen=True)
class Palette:
    name: str
    background: str
    strut: str
    cable: str
    zero: str
    vertex: str
    label: str


PAPER = Palette(
    name="paper",
    background="#ffffff",
    strut="#c0392b",
    cable="#1f5fbf",
    zero="#9e9e9e",
    vertex="#1a1a1a",
    label="#1a1a1a",
)

# dark background, brighter strokes
SLATE = Palette(
    name="slate",
    background="#1e2430",
    strut="#ff6b5b",
    cable="#5aa9ff",
    zero="#7a808a",
    vertex="#e8e8e8",
    label="#e8e8e8",
)

PALETTES = {p.name: p for p in (PAPER, SLATE)}


def get_palette(name: str) -> Palette:
    try:
        return PALETTES[name]
    except KeyError:
        raise ConfigError(f"unknown render theme: {name}") from None
