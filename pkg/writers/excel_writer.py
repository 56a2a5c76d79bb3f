"""Excel writer with the house table formatting - starts from B2."""

from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import Any, Dict, List

from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

logger = logging.getLogger(__name__)

# Integer-valued columns get a plain integer format
_INTEGER_COLUMNS = {"t"}

COLUMN_WIDTHS = {
    "series": 16,
    "t": 8,
}

_FLOAT_WIDTH = 24


def non_finite_as_text(v: Any) -> Any:
    """±inf/NaN as the text the CLI accepts back ("inf", "-inf", "nan"); other values unchanged.

    Neither Excel nor strict JSON can encode non-finite floats.
    """
    if isinstance(v, float) and not math.isfinite(v):
        return "nan" if math.isnan(v) else ("inf" if v > 0 else "-inf")
    return v


def write_rows_to_xlsx(
    output_path: Path,
    sheet_name: str,
    headers: List[str],
    rows: List[Dict[str, Any]],
) -> None:
    """Write rows as a styled table: bold header on a tinted fill, thin grid, thick top border."""
    logger.info("📝 Writing Excel (B2 start): %s", output_path.name)

    wb = Workbook()
    ws = wb.active
    ws.title = sheet_name[:31]
    ws.sheet_view.showGridLines = False

    thin = Side(style="thin", color="000000")
    thick = Side(style="thick", color="000000")
    full_grid = Border(left=thin, right=thin, top=thin, bottom=thin)

    start_col = 2  # B
    start_row = 2
    last_col = start_col + len(headers) - 1

    # --- HEADERS ---
    for col_idx, header in enumerate(headers):
        cell = ws.cell(row=start_row, column=start_col + col_idx, value=header)
        cell.font = Font(bold=True, color="000000", size=10, name="Roboto")
        cell.fill = PatternFill(start_color="FBF0D9", end_color="FBF0D9", fill_type="solid")
        cell.alignment = Alignment(horizontal="center", vertical="center")
        cell.border = Border(
            left=thick if col_idx == 0 else None,
            right=thick if start_col + col_idx == last_col else None,
            top=thick,
            bottom=thin,
        )

    # --- DATA ---
    for row_idx, row_data in enumerate(rows):
        excel_row = start_row + 1 + row_idx
        for col_idx, header in enumerate(headers):
            value = non_finite_as_text(row_data.get(header))
            cell = ws.cell(row=excel_row, column=start_col + col_idx, value=value)
            cell.font = Font(size=10, name="Roboto")
            cell.alignment = Alignment(horizontal="center", vertical="center")
            cell.border = full_grid
            if header in _INTEGER_COLUMNS:
                cell.number_format = "0"
            elif isinstance(value, float):
                cell.number_format = "0.000000000000E+00"

    for col_idx, header in enumerate(headers):
        letter = get_column_letter(start_col + col_idx)
        ws.column_dimensions[letter].width = COLUMN_WIDTHS.get(header, _FLOAT_WIDTH)

    # Header stays visible while scrolling long series
    ws.freeze_panes = ws.cell(row=start_row + 1, column=start_col)

    wb.save(output_path)
    logger.info("✅ Excel saved: %s (%d rows)", output_path.name, len(rows))
