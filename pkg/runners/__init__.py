"""Pipeline orchestration: QFI sweeps, figure presets and validation suites."""

from .figures import FIGURE_NAMES, decouple_report, figure_curves, figure_rows
from .pipeline import (
    OptimalReport,
    compute_sweep,
    resolve_point,
    run_evolve,
    run_matrix,
    run_optimal,
    run_qfi,
)
from .validation import SUITES, CheckResult, ValidationOptions, run_validation

__all__ = [
    "compute_sweep",
    "resolve_point",
    "run_qfi",
    "run_matrix",
    "run_evolve",
    "run_optimal",
    "OptimalReport",
    "figure_curves",
    "figure_rows",
    "decouple_report",
    "FIGURE_NAMES",
    "run_validation",
    "ValidationOptions",
    "CheckResult",
    "SUITES",
]
