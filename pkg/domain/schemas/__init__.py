"""Export schemas for easy importing."""

from .evolve import EVOLVE_HEADERS
from .qfi import QFI_HEADERS, SWEEP_COLUMNS

__all__ = ["QFI_HEADERS", "SWEEP_COLUMNS", "EVOLVE_HEADERS"]
