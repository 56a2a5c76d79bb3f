"""CSV and JSON emitters, plus the format dispatcher used by the CLI."""

from __future__ import annotations

import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

import pandas as pd

from config import CSV_SIGNIFICANT_DIGITS
from domain.errors import ConfigError

from .excel_writer import non_finite_as_text, write_rows_to_xlsx

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json", "xlsx")


def rows_to_csv(headers: List[str], rows: List[Dict[str, Any]]) -> str:
    """Header row, comma separator, decimal point, 17 significant digits."""
    frame = pd.DataFrame.from_records(rows, columns=headers)
    buf = io.StringIO()
    frame.to_csv(buf, index=False, float_format=f"%.{CSV_SIGNIFICANT_DIGITS}g", lineterminator="\n")
    return buf.getvalue()


def rows_to_json(headers: List[str], rows: List[Dict[str, Any]]) -> str:
    """A strict JSON array of row objects.

    Finite floats use Python's round-trip repr; ±inf and NaN become the strings
    "inf", "-inf" and "nan".
    """
    ordered = [{h: non_finite_as_text(row.get(h)) for h in headers} for row in rows]
    return json.dumps(ordered, indent=2, allow_nan=False) + "\n"


def write_rows(
    headers: List[str],
    rows: List[Dict[str, Any]],
    fmt: str = "csv",
    output: Optional[Path] = None,
    sheet_name: str = "qfi",
    stream: Optional[TextIO] = None,
) -> None:
    """Write to `output`, or to `stream` (stdout by default) when no path is given."""
    if fmt not in FORMATS:
        raise ConfigError("--format", f"expected one of {', '.join(FORMATS)}, got {fmt!r}")

    if fmt == "xlsx":
        if output is None:
            raise ConfigError("--output", "xlsx output needs a file path")
        output.parent.mkdir(parents=True, exist_ok=True)
        write_rows_to_xlsx(output, sheet_name, headers, rows)
        return

    text = rows_to_csv(headers, rows) if fmt == "csv" else rows_to_json(headers, rows)
    if output is None:
        (stream or sys.stdout).write(text)
        return

    logger.info("📝 Writing %s: %s", fmt.upper(), output)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    logger.info("✅ Saved %d rows to %s", len(rows), output.name)
