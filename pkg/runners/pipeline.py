"""Main pipeline: resolve a RunConfig into gates and states, compute, and map to output rows."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from channels import noisy_rotation, noisy_rotation_derivative
from config import MAX_WORKERS
from domain.errors import RegimeMismatchError
from domain.noise import NoiseParams
from domain.records import QfiSeries
from domain.run_config import RunConfig
from domain.schemas import EVOLVE_HEADERS
from domain.states import GateSpec, LinearMap3, Vector3
from mapping import qfi_headers, series_to_qfi_rows, trace_to_evolve_rows
from metrology import dephasing_qfi, evolve, optimal_steps_dephasing, qfi_curve

logger = logging.getLogger(__name__)

Rows = List[Dict[str, Any]]


@dataclass(frozen=True)
class OptimalReport:
    k_dephase: float
    t_real: float
    t_int: int
    qfi: float


def resolve_point(config: RunConfig, point: Dict[str, float]) -> Tuple[GateSpec, NoiseParams, Vector3]:
    """Apply one sweep point's overrides to the base gate, noise and initial state."""
    gate = config.gate.with_theta(point["theta"]) if "theta" in point else config.gate
    overrides = {k: point[k] for k in ("k_dephase", "k_tilt") if k in point}
    noise = config.noise.replace(**overrides) if overrides else config.noise
    b0 = config.initial_vector(alpha=point.get("alpha"))
    return gate, noise, b0


def compute_sweep(
    config: RunConfig,
    max_workers: int = MAX_WORKERS,
) -> List[Tuple[Dict[str, float], QfiSeries]]:
    """QFI curve per sweep point, in sweep order (first sweep outermost)."""
    points = config.sweep_points()
    # Inputs are resolved up front so a bad point fails before any work is scheduled.
    jobs = [resolve_point(config, p) for p in points]

    def run(job: Tuple[GateSpec, NoiseParams, Vector3]) -> QfiSeries:
        gate, noise, b0 = job
        return qfi_curve(gate, noise, b0, config.t_max)

    workers = max(1, min(max_workers, len(jobs)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        series = list(pool.map(run, jobs))

    logger.info("✓ Computed %d QFI curve(s) up to t=%d", len(series), config.t_max)
    return list(zip(points, series))


def run_qfi(config: RunConfig, max_workers: int = MAX_WORKERS) -> Tuple[List[str], Rows]:
    results = compute_sweep(config, max_workers=max_workers)
    headers = qfi_headers([s.name for s in config.sweeps])
    rows: Rows = []
    for point, series in results:
        rows.extend(series_to_qfi_rows(series, point))
    logger.info("✓ Mapped %d rows", len(rows))
    return headers, rows


def run_matrix(config: RunConfig) -> LinearMap3:
    return noisy_rotation(config.gate, config.noise)


def run_evolve(config: RunConfig) -> Tuple[List[str], Rows]:
    m = noisy_rotation(config.gate, config.noise)
    dm = noisy_rotation_derivative(config.gate, config.noise)
    trace = evolve(m, dm, config.initial_vector(), config.t_max)
    logger.info("✓ Evolved %d steps", trace.t_max)
    return list(EVOLVE_HEADERS), trace_to_evolve_rows(trace)


def run_optimal(config: RunConfig, k_dephase: Optional[float] = None) -> OptimalReport:
    """Optimal step count under pure dephasing, with the QFI of the configured state at that step."""
    noise = config.noise if k_dephase is None else config.noise.replace(k_dephase=k_dephase)
    if not noise.k_tilt.noiseless:
        raise RegimeMismatchError(
            f"k_tilt = {noise.k_tilt}: no closed-form optimum exists with tilting noise; "
            "run the 'qfi' subcommand and take the argmax of the qfi column instead"
        )
    t_real, t_int = optimal_steps_dephasing(noise.k_dephase)
    report = OptimalReport(
        k_dephase=float(noise.k_dephase),
        t_real=t_real,
        t_int=t_int,
        qfi=dephasing_qfi(config.gate, noise.k_dephase, config.initial_vector(), t_int),
    )
    logger.info("✓ Optimal steps for k_dephase=%s: t_real=%.6f, t_int=%d", noise.k_dephase, t_real, t_int)
    return report
