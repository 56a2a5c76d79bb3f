"""Map an evolution trace to evolve output rows."""

from __future__ import annotations

from typing import Any, Dict, List

import numpy as np

from domain.records import EvolutionTrace


def trace_to_evolve_rows(trace: EvolutionTrace) -> List[Dict[str, Any]]:
    purity = np.minimum(1.0, np.einsum("ij,ij->i", trace.bloch, trace.bloch))
    return [
        {
            "t": t,
            "bx": float(b[0]),
            "by": float(b[1]),
            "bz": float(b[2]),
            "dbx": float(db[0]),
            "dby": float(db[1]),
            "dbz": float(db[2]),
            "purity": float(purity[t]),
        }
        for t, b, db in trace.steps
    ]
