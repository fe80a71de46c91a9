"""Matroid workbench: exact finite-field matroids, projective/affine
geometries, density bound checkers, and certificate search."""

from ._core import (
    Matroid,
    pg,
    ag,
    uniform,
    direct_sum,
    from_json,
    find_restriction,
    verify_restriction,
    has_u2_minor,
    is_representable,
    find_pg_minor,
    kung_check,
    kungrel_check,
    projection_bound,
    verify_projection_instance,
    build_stack_greedy,
    verify_stack,
    stack_flat_search,
    is_weakly_round,
    weakly_round_restriction,
    majority_flat,
    dense_point_above,
    run_cli,
    __version__,
)

__all__ = [
    "Matroid", "pg", "ag", "uniform", "direct_sum", "from_json",
    "find_restriction", "verify_restriction", "has_u2_minor",
    "is_representable", "find_pg_minor", "kung_check", "kungrel_check",
    "projection_bound", "verify_projection_instance", "build_stack_greedy",
    "verify_stack", "stack_flat_search", "is_weakly_round",
    "weakly_round_restriction", "majority_flat", "dense_point_above",
    "run_cli", "__version__",
]
