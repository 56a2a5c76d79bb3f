"""
EXCEL READER
------------
Reads the table written by writers.write_rows_to_xlsx back into row dicts.
The header row is the first non-empty row; the table may start at any column (B2 by default).
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Optional

from openpyxl import load_workbook


def read_xlsx_table(xlsx_path: Path, sheet_name: Optional[str] = None) -> List[Dict[str, Any]]:
    """
    Args:
        xlsx_path: Path to the workbook
        sheet_name: Optional sheet name (uses first sheet if None)

    Returns:
        List of row dicts keyed by the header labels

    Raises:
        FileNotFoundError: If file doesn't exist
        ValueError: If the file is not a readable workbook or holds no table
    """
    xlsx_path = Path(xlsx_path).expanduser().resolve()
    if not xlsx_path.exists():
        raise FileNotFoundError(f"Excel file not found: {xlsx_path}")

    try:
        wb = load_workbook(xlsx_path, data_only=True, read_only=True)
    except Exception as e:
        raise ValueError(f"Cannot read Excel file (is it corrupted or wrong format?): {e}") from e

    try:
        ws = wb[sheet_name] if sheet_name else wb.worksheets[0]
        grid = [list(r) for r in ws.iter_rows(values_only=True)]
    finally:
        wb.close()

    header_idx = next((i for i, r in enumerate(grid) if any(v not in (None, "") for v in r)), None)
    if header_idx is None:
        raise ValueError(f"No table found in {xlsx_path.name}")
    header_row = grid[header_idx]
    first_col = next(c for c, v in enumerate(header_row) if v not in (None, ""))
    headers = [str(h).strip() for h in header_row[first_col:] if h not in (None, "")]

    rows: List[Dict[str, Any]] = []
    for raw in grid[header_idx + 1 :]:
        cells = list(raw[first_col : first_col + len(headers)])
        if all(v in (None, "") for v in cells):
            continue
        cells += [None] * (len(headers) - len(cells))
        rows.append(dict(zip(headers, cells)))
    return rows
