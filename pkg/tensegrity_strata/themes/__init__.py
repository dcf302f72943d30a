"""Colour themes for tensegrity-strata."""

from .console import CONSOLE_THEME
from .palette import PALETTES, Palette, get_palette

__all__ = ["CONSOLE_THEME", "PALETTES", "Palette", "get_palette"]
