"""Map QFI series to flat output rows (sweep columns first, then QFI_HEADERS)."""

from __future__ import annotations

from typing import Any, Dict, List, Mapping, Optional, Sequence

from domain.records import QfiSeries
from domain.schemas import QFI_HEADERS, SWEEP_COLUMNS


def qfi_headers(sweep_names: Sequence[str] = ()) -> List[str]:
    """Header row for a run that sweeps `sweep_names` (kept in the given order)."""
    unknown = [n for n in sweep_names if n not in SWEEP_COLUMNS]
    if unknown:
        raise ValueError(f"Unknown sweep columns: {unknown}")
    return list(sweep_names) + QFI_HEADERS


def series_to_qfi_rows(
    series: QfiSeries,
    sweep_point: Optional[Mapping[str, Any]] = None,
) -> List[Dict[str, Any]]:
    """One row per step t; the sweep values are repeated on every row."""
    prefix = dict(sweep_point or {})
    frame = series.to_frame()
    rows: List[Dict[str, Any]] = []
    for rec in frame.itertuples(index=False):
        row = dict(prefix)
        row.update(
            {
                "t": int(rec.t),
                "qfi": float(rec.qfi),
                "bx": float(rec.bx),
                "by": float(rec.by),
                "bz": float(rec.bz),
                "purity": float(rec.purity),
            }
        )
        rows.append(row)
    return rows
