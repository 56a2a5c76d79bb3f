"""Simple file readers - no interpretation, just raw data."""

from .config_file import normalize_key, read_config_file
from .excel import read_xlsx_table
from .series import read_series

__all__ = [
    "read_config_file",
    "normalize_key",
    "read_xlsx_table",
    "read_series",
]
