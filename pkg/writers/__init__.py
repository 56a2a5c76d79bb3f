"""CSV, JSON and Excel writers."""

from .excel_writer import write_rows_to_xlsx
from .tabular_writer import FORMATS, rows_to_csv, rows_to_json, write_rows

__all__ = ["write_rows_to_xlsx", "rows_to_csv", "rows_to_json", "write_rows", "FORMATS"]
