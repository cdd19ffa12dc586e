"""Exact coordinates, intersection numbers and drawings of integral laminations
on the n-punctured disk.

Everything is integer arithmetic end to end; overflow raises OverflowError
instead of returning wrong answers, and invalid coordinate vectors raise
ValueError with the violated invariants spelled out.
"""

from ._core import (
    CurveDiagram,
    DynnikovCoords,
    IntervalFamily,
    RelaxedCurve,
    StripStats,
    Transit,
    TriangleCoords,
    diagram_triangle,
    dynnikov_from_triangle,
    family_triangle,
    intersect_d3,
    intersect_relaxed,
    intersect_relaxed_family,
    linking_intersection,
    open_components_in_range,
    random_family,
    reconstruct,
    relaxed_curve_dynnikov,
    render_svg,
    span_counts,
    strip_stats,
    triangle_from_dynnikov,
    validate_triangle,
)

__version__ = "0.1.0"

__all__ = [
    "CurveDiagram",
    "DynnikovCoords",
    "IntervalFamily",
    "RelaxedCurve",
    "StripStats",
    "Transit",
    "TriangleCoords",
    "diagram_triangle",
    "dynnikov_from_triangle",
    "family_triangle",
    "intersect_d3",
    "intersect_relaxed",
    "intersect_relaxed_family",
    "linking_intersection",
    "open_components_in_range",
    "random_family",
    "reconstruct",
    "relaxed_curve_dynnikov",
    "render_svg",
    "span_counts",
    "strip_stats",
    "triangle_from_dynnikov",
    "validate_triangle",
]
