"""Polygon triangulations, quiver mutation, and exact mutation-class enumeration."""

from .quiver import (
    CanonicalQuiver,
    Quiver,
    are_isomorphic,
    canonical_form,
    canonical_quiver,
    delete_vertex,
    is_connected,
    is_type_a_quiver,
    linear_quiver,
    mutate,
    mutation_is_involutive,
    quiver_from_json,
    quiver_to_dot,
    quiver_to_json,
)
from .polygon import (
    DiagonalClass,
    RotationClass,
    Triangulation,
    classify_close_diagonal,
    crosses,
    diagonal,
    distance,
    extend_at,
    factor_out,
    fan_triangulation,
    flip,
    is_close_to_border,
    quiver_of,
    rotate,
    rotation_canonical,
    triangles,
    triangulation_from_json,
    triangulation_to_json,
)
from .enumeration import (
    FrontierStats,
    MutationClassCatalog,
    Report,
    TriangulationCatalog,
    catalan,
    commutation_report,
    enumerate_mutation_class,
    enumerate_triangulations,
    lemma_report,
    mutation_class_count,
    orbit_statistics,
    rotation_orbit_report,
    structural_report,
    verify_rotation_bijection,
)

__all__ = [
    "CanonicalQuiver",
    "DiagonalClass",
    "FrontierStats",
    "MutationClassCatalog",
    "Quiver",
    "Report",
    "RotationClass",
    "Triangulation",
    "TriangulationCatalog",
    "are_isomorphic",
    "canonical_form",
    "canonical_quiver",
    "catalan",
    "classify_close_diagonal",
    "commutation_report",
    "crosses",
    "delete_vertex",
    "diagonal",
    "distance",
    "enumerate_mutation_class",
    "enumerate_triangulations",
    "extend_at",
    "factor_out",
    "fan_triangulation",
    "flip",
    "is_close_to_border",
    "is_connected",
    "is_type_a_quiver",
    "lemma_report",
    "linear_quiver",
    "mutate",
    "mutation_class_count",
    "mutation_is_involutive",
    "orbit_statistics",
    "quiver_from_json",
    "quiver_of",
    "quiver_to_dot",
    "quiver_to_json",
    "rotate",
    "rotation_canonical",
    "rotation_orbit_report",
    "structural_report",
    "triangles",
    "triangulation_from_json",
    "triangulation_to_json",
    "verify_rotation_bijection",
]

__version__ = "0.1.0"
