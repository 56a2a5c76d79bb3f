"""
Central configuration for numerical tolerances, sampling defaults and output paths.

This module defines:
- Repository-relative output directory used by the CLI when no --output is given.
- Tolerances shared by the geometry, channels and metrology packages.
- Series/asymptotic switch points for the special functions.
- Quadrature refinement limits and Monte Carlo defaults used by the oracle package.
- Concurrency and output formatting defaults.

Values marked with `_env_*` can be overridden through NOISYQFI_<NAME> environment
variables (a `.env` file at the repository root is loaded first).
"""

from __future__ import annotations

import logging
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

_log = logging.getLogger(__name__)

_ENV_PREFIX = "NOISYQFI_"


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(_ENV_PREFIX + name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        _log.warning("Ignoring malformed %s%s=%r, using %d", _ENV_PREFIX, name, raw, default)
        return default


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(_ENV_PREFIX + name)
    if raw is None or not raw.strip():
        return default
    try:
        return float(raw)
    except ValueError:
        _log.warning("Ignoring malformed %s%s=%r, using %g", _ENV_PREFIX, name, raw, default)
        return default


def _env_str(name: str, default: str) -> str:
    raw = os.getenv(_ENV_PREFIX + name)
    return raw.strip() if raw and raw.strip() else default


PROJECT_ROOT = Path(__file__).resolve().parents[1]

OUTPUT_ROOT = Path(_env_str("OUTPUT_ROOT", str(PROJECT_ROOT / "qfi_outputs")))

LOG_LEVEL = _env_str("LOG_LEVEL", "INFO")

# Bloch ball / rotation tolerances
BLOCH_NORM_TOL = 1e-12
AXIS_NORM_TOL = 1e-12
ORTHOGONALITY_TOL = 1e-10
PURITY_EPS = 1e-9

# Special functions
COTH_SERIES_THRESHOLD = 1e-4
TILT_SERIES_THRESHOLD = 0.1
BESSEL_OVERFLOW_ARG = 700.0
BESSEL_ASYMPTOTIC_ARG = 1.0e4

# Quadrature (nodes per dimension, doubled until the entrywise change is below QUAD_TOL)
QUAD_START_NODES = 64
QUAD_MAX_NODES = 1024
QUAD_TOL = 1e-10

# Monte Carlo
DEFAULT_SAMPLES = _env_int("SAMPLES", 1_000_000)
DEFAULT_SEED = _env_int("SEED", 20240917)
MC_CHUNK_SIZE = 65_536
MC_SIGMA = _env_float("MC_SIGMA", 5.0)

# Validation defaults
FD_STEP = 1e-6
FD_REL_TOL = 1e-5
QUADRATURE_ABS_TOL = 1e-8
INVARIANCE_ABS_TOL = 1e-9
CLOSED_FORM_REL_TOL = 1e-10
INVARIANCE_TRIALS = 100

# Concurrency
MAX_WORKERS = _env_int("MAX_WORKERS", min(8, os.cpu_count() or 1))

# Output
CSV_SIGNIFICANT_DIGITS = 17
MATRIX_SIGNIFICANT_DIGITS = 17
DEFAULT_STEPS = 50
