"""
Validation suites: every analytic result checked against an independent oracle.

Each suite returns CheckResults; a check passes when its worst deviation is
within tolerance × scale. A scale of 0 therefore fails every inexact check.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from channels import (
    dephased_rotation_z,
    general_noisy_rotation_z,
    general_noisy_rotation_z_derivative,
    noisy_rotation,
    noisy_rotation_derivative,
    tilted_rotation_z,
    uniform_tilting,
)
from config import (
    CLOSED_FORM_REL_TOL,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    FD_REL_TOL,
    FD_STEP,
    INVARIANCE_ABS_TOL,
    INVARIANCE_TRIALS,
    MC_SIGMA,
    QUADRATURE_ABS_TOL,
)
from domain.noise import NoiseParams
from domain.states import GateSpec
from geometry import align_axis_to_z, axis_rotation, bloch_from_angles
from metrology import (
    QfiRegime,
    classical_fi_projective,
    closed_form_qfi,
    evolve,
    optimal_steps_dephasing,
    qfi_curve,
    qfi_from_bloch,
)
from oracle import (
    bessel_i_series,
    finite_difference_db,
    mc_noisy_rotation,
    quadrature_noisy_rotation,
    tilt_integral_identities,
)
from special import bessel_i

logger = logging.getLogger(__name__)

INF = math.inf

GRID_THETAS = (math.pi / 8, math.pi / 4, math.pi / 2)
GRID_K_DEPHASE = (1.0, 3.0, INF)
GRID_K_TILT = (1.0, 7.0, INF)
FD_STEPS = (1, 5, 20)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_deviation: float
    tolerance: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name:<28} max_dev={self.max_deviation:.3e}  tol={self.tolerance:.3e}"
        return f"{text}  ({self.detail})" if self.detail else text


@dataclass(frozen=True)
class ValidationOptions:
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    scale: float = 1.0


def noise_grid() -> List[Tuple[float, NoiseParams]]:
    """θ × k_D × k_T, without the fully noiseless corner."""
    out = []
    for theta, kd, kt in itertools.product(GRID_THETAS, GRID_K_DEPHASE, GRID_K_TILT):
        if math.isinf(kd) and math.isinf(kt):
            continue
        out.append((theta, NoiseParams(kd, kt)))
    return out


def _label(theta: float, params: NoiseParams) -> str:
    return f"theta={theta:.4g}, k_D={params.k_dephase}, k_T={params.k_tilt}"


class _Worst:
    """Tracks the largest deviation and where it happened."""

    def __init__(self) -> None:
        self.value = 0.0
        self.where = ""

    def update(self, value: float, where: str) -> None:
        if value > self.value or not self.where:
            self.value, self.where = float(value), where

    def result(self, name: str, tolerance: float) -> CheckResult:
        return CheckResult(name, self.value <= tolerance, self.value, tolerance, self.where)


def check_monte_carlo(options: ValidationOptions) -> CheckResult:
    """Worst |MC − analytic| in units of (MC_SIGMA·stderr + 1e-12); passes when ≤ scale."""
    worst = _Worst()
    for i, (theta, params) in enumerate(noise_grid()):
        est = mc_noisy_rotation(theta, params, options.samples, seed=options.seed + i)
        analytic = general_noisy_rotation_z(theta, params)
        ratio = np.abs(est.mean_map - analytic) / (MC_SIGMA * est.stderr_map + 1e-12)
        worst.update(float(ratio.max()), _label(theta, params))
    return worst.result("mc_vs_analytic", options.scale)


def check_quadrature(options: ValidationOptions) -> CheckResult:
    worst = _Worst()
    for theta, params in noise_grid():
        dev = np.abs(quadrature_noisy_rotation(theta, params) - general_noisy_rotation_z(theta, params)).max()
        worst.update(float(dev), _label(theta, params))
    return worst.result("quadrature_vs_analytic", QUADRATURE_ABS_TOL * options.scale)


def _trace_at(theta: float, params: NoiseParams, b0: np.ndarray, t: int) -> np.ndarray:
    trace = evolve(
        general_noisy_rotation_z(theta, params),
        general_noisy_rotation_z_derivative(theta, params),
        b0,
        t,
    )
    return trace.bloch[t]


def check_finite_differences(options: ValidationOptions) -> CheckResult:
    """Relative ‖db_fd − db‖ / ‖db‖ for evolve's derivative."""
    worst = _Worst()
    b0 = np.array([1.0, 0.0, 0.0])
    for theta, params in noise_grid():
        m = general_noisy_rotation_z(theta, params)
        dm = general_noisy_rotation_z_derivative(theta, params)
        trace = evolve(m, dm, b0, max(FD_STEPS))
        for t in FD_STEPS:
            fd = finite_difference_db(lambda th: _trace_at(th, params, b0, t), theta, FD_STEP)
            db = trace.derivative[t]
            rel = float(np.linalg.norm(fd - db) / max(np.linalg.norm(db), np.finfo(float).tiny))
            worst.update(rel, f"{_label(theta, params)}, t={t}")
    return worst.result("finite_differences", FD_REL_TOL * options.scale)


def _random_unit(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def _random_concentration(rng: np.random.Generator) -> float:
    return INF if rng.random() < 0.25 else float(rng.uniform(0.5, 10.0))


def check_rotation_invariance(options: ValidationOptions, trials: int = INVARIANCE_TRIALS) -> CheckResult:
    """General-axis QFI against the ẑ-axis QFI of R_nz·b0."""
    rng = np.random.default_rng(options.seed)
    worst = _Worst()
    for trial in range(trials):
        axis = _random_unit(rng)
        b0 = _random_unit(rng) * rng.uniform(0.2, 1.0)
        theta = float(rng.uniform(0.1, 2 * math.pi - 0.1))
        params = NoiseParams(_random_concentration(rng), _random_concentration(rng))
        general = qfi_curve(GateSpec.about(axis, theta), params, b0, 20)
        aligned = qfi_curve(GateSpec.z(theta), params, align_axis_to_z(axis) @ b0, 20)
        worst.update(float(np.abs(general.qfi - aligned.qfi).max()), f"trial {trial}")
    return worst.result("rotation_invariance", INVARIANCE_ABS_TOL * options.scale)


def _rel(a: np.ndarray, b: np.ndarray) -> float:
    a, b = np.asarray(a), np.asarray(b)
    denom = np.maximum(np.abs(b), np.finfo(float).tiny)
    mask = (a != 0) | (b != 0)
    return float((np.abs(a - b)[mask] / denom[mask]).max()) if mask.any() else 0.0


def check_closed_forms(options: ValidationOptions) -> List[CheckResult]:
    results: List[CheckResult] = []

    worst = _Worst()
    for theta in GRID_THETAS:
        series = qfi_curve(GateSpec.z(theta), NoiseParams.noiseless(), (1.0, 0.0, 0.0), 100)
        worst.update(float(np.abs(series.qfi - series.t.astype(float) ** 2).max()), f"theta={theta:.4g}")
    results.append(worst.result("closed_form_noiseless", 1e-9 * options.scale))

    worst = _Worst()
    for kd, alpha in itertools.product((0.5, 1.0, 3.0, 10.0), (math.pi / 4, math.pi / 2)):
        params = NoiseParams.dephasing(kd)
        b0 = bloch_from_angles(1.0, alpha, 0.0)
        series = qfi_curve(GateSpec.z(math.pi / 4), params, b0, 200)
        expected = [closed_form_qfi(QfiRegime.DEPHASING, t, None, params, 1.0, alpha) for t in range(201)]
        worst.update(_rel(series.qfi, np.array(expected)), f"k_D={kd:g}, alpha={alpha:.4g}")
    results.append(worst.result("closed_form_dephasing", CLOSED_FORM_REL_TOL * options.scale))

    worst = _Worst()
    for kd, theta in itertools.product((INF, 1.0, 3.0), GRID_THETAS):
        params = NoiseParams(kd, 0.0)
        regime = QfiRegime.UNIFORM_TILTING if math.isinf(kd) else QfiRegime.GENERAL_KT_ZERO
        series = qfi_curve(GateSpec.z(theta), params, (1.0, 0.0, 0.0), 100)
        expected = [closed_form_qfi(regime, t, theta, params) for t in range(101)]
        worst.update(_rel(series.qfi, np.array(expected)), f"{regime.value}, k_D={kd:g}, theta={theta:.4g}")
    results.append(worst.result("closed_form_kT_zero", CLOSED_FORM_REL_TOL * options.scale))

    mismatches = []
    for kd in (0.5, 1.0, 3.0, 10.0):
        _, t_int = optimal_steps_dephasing(kd)
        series = qfi_curve(GateSpec.z(math.pi / 4), NoiseParams.dephasing(kd), (1.0, 0.0, 0.0), 4 * t_int + 10)
        if series.argmax() != t_int:
            mismatches.append(f"k_D={kd:g}: argmax {series.argmax()} != t_int {t_int}")
    results.append(
        CheckResult(
            "optimal_steps_argmax",
            not mismatches,
            float(len(mismatches)),
            0.0,
            "; ".join(mismatches),
        )
    )

    theta = math.pi / 4
    seams = [
        ("k_T=1e3 vs rotation", np.abs(tilted_rotation_z(theta, 1e3) - axis_rotation(GateSpec.z(theta))).max(), 2e-3),
        ("k_T=1e-6 vs uniform", np.abs(tilted_rotation_z(theta, 1e-6) - uniform_tilting(theta)).max(), 1e-5),
        (
            "dephasing sentinel",
            np.abs(general_noisy_rotation_z(theta, NoiseParams.dephasing(3.0)) - dephased_rotation_z(theta, 3.0)).max(),
            0.0,
        ),
        (
            "tilting sentinel",
            np.abs(general_noisy_rotation_z(theta, NoiseParams.tilting(7.0)) - tilted_rotation_z(theta, 7.0)).max(),
            0.0,
        ),
    ]
    for name, dev, tol in seams:
        results.append(CheckResult(f"seam: {name}", float(dev) <= tol * options.scale, float(dev), tol * options.scale))
    return results


def check_integral_identities(options: ValidationOptions) -> CheckResult:
    worst = _Worst()
    for k in (0.5, 1.0, 3.0, 7.0, 10.0):
        for check in tilt_integral_identities(k):
            worst.update(check.abs_error, f"k={k:g}, {check.name}")
    return worst.result("tilt_integral_identities", 1e-10 * options.scale)


def check_special_functions(options: ValidationOptions) -> List[CheckResult]:
    recurrence = _Worst()
    for j, k in itertools.product(range(1, 6), (0.5, 1.0, 5.0, 20.0)):
        lhs = bessel_i(j - 1, k) - bessel_i(j + 1, k)
        rhs = 2.0 * j / k * bessel_i(j, k)
        recurrence.update(abs(lhs - rhs) / abs(rhs), f"j={j}, k={k:g}")
    series = _Worst()
    for n, k in itertools.product(range(4), (0.1, 1.0, 3.0, 10.0, 30.0)):
        ref = bessel_i_series(n, k)
        series.update(abs(bessel_i(n, k) - ref) / ref, f"order={n}, k={k:g}")
    return [
        recurrence.result("bessel_recurrence", 1e-10 * options.scale),
        series.result("bessel_vs_series", 1e-12 * options.scale),
    ]


def check_fisher_bound(options: ValidationOptions, trials: int = 1000) -> List[CheckResult]:
    """Projective FI never exceeds the QFI, and saturates it for the noiseless equatorial state."""
    rng = np.random.default_rng(options.seed + 1)
    worst = _Worst()
    for trial in range(trials):
        theta = float(rng.uniform(0.1, 2 * math.pi - 0.1))
        params = NoiseParams(_random_concentration(rng), _random_concentration(rng))
        gate = GateSpec.about(_random_unit(rng), theta)
        b0 = _random_unit(rng) * rng.uniform(0.2, 1.0)
        t = int(rng.integers(1, 15))
        trace = evolve(*_gate_maps(gate, params), b0, t)
        b, db = trace.bloch[t], trace.derivative[t]
        m = _random_unit(rng)
        if abs(float(m @ b)) >= 1.0:
            continue
        excess = classical_fi_projective(m, b, db) - qfi_from_bloch(b, db)
        worst.update(max(excess, 0.0), f"trial {trial}")
    bound = worst.result("fisher_le_qfi", 1e-12 * options.scale)

    theta = math.pi / 4
    trace = evolve(*_gate_maps(GateSpec.z(theta), NoiseParams.noiseless()), (1.0, 0.0, 0.0), 10)
    gap = _Worst()
    for t in range(1, 11):
        b, db = trace.bloch[t], trace.derivative[t]
        m = db / np.linalg.norm(db)
        gap.update(abs(qfi_from_bloch(b, db) - classical_fi_projective(m, b, db)), f"t={t}")
    return [bound, gap.result("fisher_saturation", 1e-9 * options.scale)]


def _gate_maps(gate: GateSpec, params: NoiseParams) -> Tuple[np.ndarray, np.ndarray]:
    return noisy_rotation(gate, params), noisy_rotation_derivative(gate, params)


SUITES: Dict[str, Callable[[ValidationOptions], Sequence[CheckResult] | CheckResult]] = {
    "special": check_special_functions,
    "integrals": check_integral_identities,
    "quadrature": check_quadrature,
    "monte_carlo": check_monte_carlo,
    "finite_differences": check_finite_differences,
    "rotation_invariance": check_rotation_invariance,
    "closed_forms": check_closed_forms,
    "fisher": check_fisher_bound,
}


def run_validation(options: Optional[ValidationOptions] = None, suites: Optional[Iterable[str]] = None) -> List[CheckResult]:
    options = options or ValidationOptions()
    names = list(suites) if suites is not None else list(SUITES)
    results: List[CheckResult] = []
    for name in names:
        out = SUITES[name](options)
        batch = [out] if isinstance(out, CheckResult) else list(out)
        for r in batch:
            (logger.info if r.passed else logger.warning)("%s", r.line())
        results.extend(batch)
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.warning("❌ %d of %d checks failed: %s", len(failed), len(results), ", ".join(failed))
    else:
        logger.info("✅ All %d checks passed", len(results))
    return results
