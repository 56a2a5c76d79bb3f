"""
Preset data sets for the published QFI figures.

Each preset is a list of labelled curves about ẑ. Rows carry a `series` label and
the parameters that vary between curves, followed by the QFI columns.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from domain.errors import ConfigError
from domain.noise import NoiseParams
from domain.records import DecompositionReport, QfiSeries
from domain.schemas import QFI_HEADERS
from domain.states import GateSpec
from mapping import series_to_qfi_rows
from metrology import decomposition_curves, qfi_curve

logger = logging.getLogger(__name__)

FIGURE_STEPS = 200

Rows = List[Dict[str, Any]]


@dataclass(frozen=True)
class CurveSpec:
    label: str
    gate: GateSpec
    noise: NoiseParams
    b0: Tuple[float, float, float]
    alpha: float = math.pi / 2

    def point(self) -> Dict[str, Any]:
        return {
            "series": self.label,
            "theta": self.gate.theta,
            "k_dephase": float(self.noise.k_dephase),
            "k_tilt": float(self.noise.k_tilt),
            "alpha": self.alpha,
        }


_X = (1.0, 0.0, 0.0)


def _dephasing_many_k() -> List[CurveSpec]:
    gate = GateSpec.z(math.pi / 4)
    return [CurveSpec(f"k_D={k:g}", gate, NoiseParams.dephasing(k), _X) for k in (0.5, 1.0, 3.0, 10.0)]


def _tilting_many_k() -> List[CurveSpec]:
    gate = GateSpec.z(math.pi / 4)
    return [CurveSpec(f"k_T={k:g}", gate, NoiseParams.tilting(k), _X) for k in (1.0, 3.0, 7.0, 10.0)]


def _tilting_many_theta() -> List[CurveSpec]:
    noise = NoiseParams.tilting(7.0)
    return [
        CurveSpec(f"theta=pi/{d}", GateSpec.z(math.pi / d), noise, _X)
        for d in (8, 4, 2)
    ]


def _tilting_many_angles() -> List[CurveSpec]:
    gate = GateSpec.z(math.pi / 3)
    noise = NoiseParams.tilting(7.0)
    out = []
    for label, alpha in (("pi/8", math.pi / 8), ("pi/4", math.pi / 4), ("3pi/8", 3 * math.pi / 8), ("pi/2", math.pi / 2)):
        b0 = (math.sin(alpha), 0.0, math.cos(alpha))
        out.append(CurveSpec(f"alpha={label}", gate, noise, b0, alpha=alpha))
    return out


PRESETS: Dict[str, Callable[[], List[CurveSpec]]] = {
    "dephasing_many_k": _dephasing_many_k,
    "tilting_many_k": _tilting_many_k,
    "tilting_many_theta": _tilting_many_theta,
    "tilting_many_angles": _tilting_many_angles,
}

DECOUPLE = "decouple"
FIGURE_NAMES = tuple(PRESETS) + (DECOUPLE,)

FIGURE_HEADERS = ["series", "theta", "k_dephase", "k_tilt", "alpha"] + QFI_HEADERS


def decouple_report(t_max: int = FIGURE_STEPS) -> DecompositionReport:
    """b0 = (0, 1, 4)/√17 about ẑ, θ = π/8, k_D = 3, k_T = 10."""
    b0 = np.array([0.0, 1.0, 4.0]) / math.sqrt(17.0)
    return decomposition_curves(GateSpec.z(math.pi / 8), NoiseParams(3.0, 10.0), b0, t_max)


def _sum_series(report: DecompositionReport) -> QfiSeries:
    perp, par = report.perpendicular, report.parallel
    return QfiSeries(
        qfi=report.total,
        bloch=perp.bloch + par.bloch,
        gate=perp.gate,
        noise=perp.noise,
        initial=perp.initial + par.initial,
        label="sum",
    )


def _series_point(series: QfiSeries) -> Dict[str, Any]:
    norm = float(np.linalg.norm(series.initial))
    alpha = math.acos(max(-1.0, min(1.0, series.initial[2] / norm))) if norm > 0 else 0.0
    return {
        "series": series.label,
        "theta": series.gate.theta,
        "k_dephase": float(series.noise.k_dephase),
        "k_tilt": float(series.noise.k_tilt),
        "alpha": alpha,
    }


def figure_curves(name: str, t_max: Optional[int] = None) -> List[Tuple[Dict[str, Any], QfiSeries]]:
    steps = FIGURE_STEPS if t_max is None else t_max
    if name == DECOUPLE:
        report = decouple_report(steps)
        logger.info(
            "✓ decouple: perpendicular+parallel deviates from complete by at most %.6g (relative %.3g)",
            report.max_abs_deviation,
            report.max_rel_deviation,
        )
        curves = [report.complete, report.dephased, report.perpendicular, report.parallel, _sum_series(report)]
        return [(_series_point(s), s) for s in curves]

    factory = PRESETS.get(name)
    if factory is None:
        raise ConfigError("--figure", f"unknown figure {name!r}; choose from {', '.join(FIGURE_NAMES)}")
    out = []
    for spec in factory():
        series = qfi_curve(spec.gate, spec.noise, spec.b0, steps, label=spec.label)
        out.append((spec.point(), series))
    logger.info("✓ %s: computed %d curves up to t=%d", name, len(out), steps)
    return out


def figure_rows(name: str, t_max: Optional[int] = None) -> Tuple[List[str], Rows]:
    rows: Rows = []
    for point, series in figure_curves(name, t_max):
        rows.extend(series_to_qfi_rows(series, point))
    return list(FIGURE_HEADERS), rows
