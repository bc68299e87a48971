"""Geometric gonality searches and divisorial refinements."""

from .refinement import RefinementResult, find_divisorial_refinement, subdivision_plans
from .search import (
    GonalityReport,
    MorphismSearch,
    VertexHurwitzData,
    find_harmonic_to_tree,
    geometric_gonality,
    is_geometrically_gonal,
)

__all__ = [
    "GonalityReport",
    "MorphismSearch",
    "RefinementResult",
    "VertexHurwitzData",
    "find_divisorial_refinement",
    "find_harmonic_to_tree",
    "geometric_gonality",
    "is_geometrically_gonal",
    "subdivision_plans",
]
