"""SVG rendering of planar tensegrities.

Coordinates are converted to floats here and only here; the picture is for
display, nothing is decided from it.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional
from xml.sax.saxutils import escape

from ..config import RenderConfig
from ..exceptions import InputError
from ..models import Framework, Stress
from ..themes import get_palette

logger = logging.getLogger(__name__)

VERTEX_RADIUS = 4
LABEL_OFFSET = 7
STROKE_WIDTH = 2


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(framework: Framework, stress: Optional[Stress] = None, config: Optional[RenderConfig] = None) -> str:
    """SVG text for ``framework``; edges are styled by the sign of ``stress``.

    Without a stress every edge is drawn as a zero edge.
    """
    if framework.d != 2:
        raise InputError("render supports d=2 only")
    config = config or RenderConfig()
    palette = get_palette(config.theme)
    tensions = stress.as_dict() if stress is not None else {}

    points = [(float(p[0]), float(p[1])) for p in framework.config.points]
    xs = [p[0] for p in points] or [0.0]
    ys = [p[1] for p in points] or [0.0]
    span_x = max(xs) - min(xs) or 1.0
    span_y = max(ys) - min(ys) or 1.0
    min_x = min(xs) - config.margin * span_x
    min_y = min(ys) - config.margin * span_y
    box_w = span_x * (1 + 2 * config.margin)
    box_h = span_y * (1 + 2 * config.margin)
    width = config.width
    height = max(1, round(width * box_h / box_w))
    scale = width / box_w

    def screen(p: tuple[float, float]) -> tuple[float, float]:
        # SVG y grows downwards
        return (p[0] - min_x) * scale, (min_y + box_h - p[1]) * scale

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="100%" height="100%" fill="{palette.background}"/>',
    ]
    counts = {"strut": 0, "cable": 0, "zero": 0}
    for i, j in framework.graph.edge_order:
        w = tensions.get((i, j), 0)
        kind = "strut" if w > 0 else "cable" if w < 0 else "zero"
        counts[kind] += 1
        color = {"strut": palette.strut, "cable": palette.cable, "zero": palette.zero}[kind]
        dash = ' stroke-dasharray="6 4"' if kind == "cable" else ""
        (x1, y1), (x2, y2) = screen(points[i - 1]), screen(points[j - 1])
        lines.append(
            f'<line class="{kind}" data-edge="{i}-{j}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="{color}" stroke-width="{STROKE_WIDTH}"{dash}/>'
        )
    for v, p in enumerate(points, start=1):
        x, y = screen(p)
        lines.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{VERTEX_RADIUS}" fill="{palette.vertex}"/>')
        lines.append(
            f'<text x="{_fmt(x + LABEL_OFFSET)}" y="{_fmt(y - LABEL_OFFSET)}" font-family="sans-serif" '
            f'font-size="12" fill="{palette.label}">{escape(f"v{v}")}</text>'
        )
    lines.append("</svg>")
    logger.debug("rendered %d vertices: %s", len(points), counts)
    return "\n".join(lines) + "\n"


def write_svg(path: str | Path, framework: Framework, stress: Optional[Stress] = None, config: Optional[RenderConfig] = None) -> None:
    Path(path).write_text(render_svg(framework, stress, config), encoding="utf-8")
