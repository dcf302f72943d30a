"""File formats and rendering."""

from .condition_file import (
    dumps_condition_system,
    dumps_points,
    load_condition_system,
    load_points,
    loads_condition_system,
    loads_points,
)
from .framework_file import (
    FrameworkFile,
    dumps_framework,
    load_framework,
    load_graph,
    loads_framework,
)
from .surgery_file import load_surgery, loads_surgery
from .svg import render_svg, write_svg

__all__ = [
    "FrameworkFile",
    "load_framework",
    "loads_framework",
    "load_graph",
    "dumps_framework",
    "load_condition_system",
    "loads_condition_system",
    "dumps_condition_system",
    "load_points",
    "loads_points",
    "dumps_points",
    "load_surgery",
    "loads_surgery",
    "render_svg",
    "write_svg",
]
