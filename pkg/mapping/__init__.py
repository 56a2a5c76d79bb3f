"""Export mapping functions."""

from .to_evolve import trace_to_evolve_rows
from .to_qfi import qfi_headers, series_to_qfi_rows

__all__ = ["series_to_qfi_rows", "qfi_headers", "trace_to_evolve_rows"]
