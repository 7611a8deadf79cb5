"""Minimum r-visibility guard placement for orthogonal path polygons.

Thin wrapper over the C++ core.  Guard points are reported in doubled
coordinates so half-integer rectangle centers stay exact.
"""

from pathguard._core import (
    GeometryError,
    Polygon,
    coverage_check,
    decompose,
    dumps,
    generate,
    guard,
    is_path,
    is_rstar,
    oracle,
    parse,
    pixel_count,
    r_visible,
    refine_and_recheck,
    render_svg,
    split_balanced,
    validate,
)

__all__ = [
    "GeometryError",
    "Polygon",
    "coverage_check",
    "decompose",
    "dumps",
    "generate",
    "guard",
    "is_path",
    "is_rstar",
    "oracle",
    "parse",
    "pixel_count",
    "r_visible",
    "refine_and_recheck",
    "render_svg",
    "split_balanced",
    "validate",
]
