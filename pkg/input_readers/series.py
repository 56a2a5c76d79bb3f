"""
SERIES READER
-------------
Loads a previously emitted QFI or evolve table (CSV, JSON or XLSX) into a DataFrame.
JSON and XLSX carry ±inf/NaN as text; those cells come back as floats.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import pandas as pd

from .excel import read_xlsx_table

_NON_FINITE = {"inf": math.inf, "-inf": -math.inf, "nan": math.nan}


def _restore_non_finite(frame: pd.DataFrame) -> pd.DataFrame:
    for col in frame.columns[frame.dtypes == object]:
        values = frame[col].map(lambda v: _NON_FINITE.get(v, v) if isinstance(v, str) else v)
        frame[col] = values.infer_objects()
    return frame


def read_series(path: Path) -> pd.DataFrame:
    """
    Raises:
        FileNotFoundError: If file doesn't exist
        ValueError: If the suffix is not .csv, .json or .xlsx
    """
    path = Path(path).expanduser().resolve()
    if not path.exists():
        raise FileNotFoundError(f"Series file not found: {path}")

    suffix = path.suffix.lower()
    if suffix == ".csv":
        return pd.read_csv(path, float_precision="round_trip")
    if suffix == ".json":
        records = json.loads(path.read_text(encoding="utf-8"))
        return _restore_non_finite(pd.DataFrame.from_records(records))
    if suffix == ".xlsx":
        return _restore_non_finite(pd.DataFrame.from_records(read_xlsx_table(path)))
    raise ValueError(f"Unsupported series file type: {suffix}")
