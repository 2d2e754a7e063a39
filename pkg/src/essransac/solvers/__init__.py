"""Hypothesis generators for the essential matrix."""

from .fivepoint import (
    back_substitute,
    build_constraint_matrix,
    build_qtilde,
    extract_action_poly,
    five_point,
    null_basis,
    solve_five_point,
)
from .iterative import (
    FIVEPOINT,
    GENERATOR_NAMES,
    GN,
    LM,
    ROBUST,
    Hypothesis,
    SolverConfig,
    random_pose,
    solve_gn,
    solve_lm,
    solve_robust,
)

__all__ = [
    "FIVEPOINT",
    "GENERATOR_NAMES",
    "GN",
    "LM",
    "ROBUST",
    "Hypothesis",
    "SolverConfig",
    "back_substitute",
    "build_constraint_matrix",
    "build_qtilde",
    "extract_action_poly",
    "five_point",
    "null_basis",
    "random_pose",
    "solve_five_point",
    "solve_gn",
    "solve_lm",
    "solve_robust",
]
