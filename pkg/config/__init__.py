"""Configuration package - exports all settings."""

from .settings import (
    # Paths
    PROJECT_ROOT,
    OUTPUT_ROOT,
    LOG_LEVEL,

    # Tolerances
    BLOCH_NORM_TOL,
    AXIS_NORM_TOL,
    ORTHOGONALITY_TOL,
    PURITY_EPS,

    # Special functions
    COTH_SERIES_THRESHOLD,
    TILT_SERIES_THRESHOLD,
    BESSEL_OVERFLOW_ARG,
    BESSEL_ASYMPTOTIC_ARG,

    # Quadrature
    QUAD_START_NODES,
    QUAD_MAX_NODES,
    QUAD_TOL,

    # Monte Carlo
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    MC_CHUNK_SIZE,
    MC_SIGMA,

    # Validation
    FD_STEP,
    FD_REL_TOL,
    QUADRATURE_ABS_TOL,
    INVARIANCE_ABS_TOL,
    CLOSED_FORM_REL_TOL,
    INVARIANCE_TRIALS,

    # Concurrency / output
    MAX_WORKERS,
    CSV_SIGNIFICANT_DIGITS,
    MATRIX_SIGNIFICANT_DIGITS,
    DEFAULT_STEPS,
)

__all__ = [
    # Paths
    "PROJECT_ROOT",
    "OUTPUT_ROOT",
    "LOG_LEVEL",

    # Tolerances
    "BLOCH_NORM_TOL",
    "AXIS_NORM_TOL",
    "ORTHOGONALITY_TOL",
    "PURITY_EPS",

    # Special functions
    "COTH_SERIES_THRESHOLD",
    "TILT_SERIES_THRESHOLD",
    "BESSEL_OVERFLOW_ARG",
    "BESSEL_ASYMPTOTIC_ARG",

    # Quadrature
    "QUAD_START_NODES",
    "QUAD_MAX_NODES",
    "QUAD_TOL",

    # Monte Carlo
    "DEFAULT_SAMPLES",
    "DEFAULT_SEED",
    "MC_CHUNK_SIZE",
    "MC_SIGMA",

    # Validation
    "FD_STEP",
    "FD_REL_TOL",
    "QUADRATURE_ABS_TOL",
    "INVARIANCE_ABS_TOL",
    "CLOSED_FORM_REL_TOL",
    "INVARIANCE_TRIALS",

    # Concurrency / output
    "MAX_WORKERS",
    "CSV_SIGNIFICANT_DIGITS",
    "MATRIX_SIGNIFICANT_DIGITS",
    "DEFAULT_STEPS",
]
