"""
Quantum Fisher information of the rotation angle, from Bloch vectors and in closed form.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from channels import noisy_rotation, noisy_rotation_derivative
from config import BLOCH_NORM_TOL, PURITY_EPS
from domain.errors import (
    DomainError,
    NoInformationError,
    NumericalError,
    RegimeMismatchError,
    UnboundedOptimumError,
)
from domain.noise import ConcentrationLike, NoiseParams, as_concentration
from domain.records import DecompositionReport, QfiSeries
from domain.states import GateSpec, VectorLike, as_vector3, check_angle
from special import bessel_ratio, bessel_ratio_complement

from .evolution import InitialState, evolve, initial_array

_SQRT_EPS = math.sqrt(PURITY_EPS)


class QfiRegime(str, Enum):
    NOISELESS = "noiseless"
    DEPHASING = "dephasing"
    UNIFORM_TILTING = "uniform_tilting"
    GENERAL_KT_ZERO = "general_kT_zero"


def _qfi_rows(bloch: NDArray[np.float64], deriv: NDArray[np.float64]) -> NDArray[np.float64]:
    n2 = np.einsum("ij,ij->i", bloch, bloch)
    if np.any(n2 > (1.0 + BLOCH_NORM_TOL) ** 2):
        worst = float(np.sqrt(n2.max()))
        raise DomainError(f"Bloch vector norm {worst!r} exceeds 1 (outside the Bloch ball)")
    d2 = np.einsum("ij,ij->i", deriv, deriv)
    bd = np.einsum("ij,ij->i", bloch, deriv)
    one_minus = 1.0 - n2
    mixed = one_minus >= PURITY_EPS
    extra = np.zeros_like(d2)
    extra[mixed] = bd[mixed] ** 2 / one_minus[mixed]
    # Near-pure rows keep the mixed term only while b·db is visibly nonzero.
    near_pure = ~mixed & (np.abs(bd) >= _SQRT_EPS) & (one_minus > 0.0)
    extra[near_pure] = bd[near_pure] ** 2 / one_minus[near_pure]
    return np.maximum(d2 + extra, 0.0)


def qfi_from_bloch(b: InitialState, db: VectorLike) -> float:
    """H = |db|² + (b·db)²/(1 − |b|²), with the pure-state branch |db|² when 1 − |b|² < PURITY_EPS."""
    b_arr = initial_array(b)
    db_arr = as_vector3(db, "db")
    return float(_qfi_rows(b_arr[None, :], db_arr[None, :])[0])


def qfi_curve(
    spec: GateSpec,
    params: NoiseParams,
    b0: InitialState,
    t_max: int,
    label: Optional[str] = None,
) -> QfiSeries:
    m = noisy_rotation(spec, params)
    dm = noisy_rotation_derivative(spec, params)
    initial = initial_array(b0)
    trace = evolve(m, dm, initial, t_max)
    qfi = _qfi_rows(trace.bloch, trace.derivative)
    qfi[0] = 0.0
    return QfiSeries(qfi=qfi, bloch=trace.bloch, gate=spec, noise=params, initial=initial, label=label)


def _check_steps(t: int) -> int:
    if isinstance(t, bool) or int(t) != t or t < 0:
        raise DomainError(f"Step count must be a non-negative integer, got: {t}")
    return int(t)


def _isotropic_qfi(t: int, theta: float, f: float, r: float) -> float:
    """QFI when the averaged map is Z·I with Z = (1 + 2F cos θ)/3."""
    if t == 0 or r == 0.0:
        return 0.0
    half = math.sin(theta / 2.0)
    # 1 − Z written without cancellation for θ → 0 and F → 1.
    one_minus_z = (2.0 / 3.0) * ((1.0 - f) + 2.0 * f * half * half)
    z = 1.0 - one_minus_z
    if z > 0.0:
        log_z = math.log1p(-one_minus_z)
        z_pow = math.exp((2 * t - 2) * log_z)
        one_minus_z2t = -math.expm1(2 * t * log_z)
    else:
        z_pow = z ** (2 * t - 2)
        one_minus_z2t = 1.0 - z ** (2 * t)
    r2 = r * r
    denom = (1.0 - r2) + r2 * one_minus_z2t
    if denom <= 0.0:
        raise DomainError("Closed form undefined: the isotropic map leaves a pure state pure")
    fs = f * math.sin(theta)
    return (4.0 / 9.0) * t * t * z_pow * fs * fs * r2 / denom


def closed_form_qfi(
    regime: QfiRegime | str,
    t: int,
    theta: Optional[float],
    params: NoiseParams,
    b0_norm: float = 1.0,
    alpha: float = math.pi / 2,
) -> float:
    """Closed-form QFI about ẑ for the four regimes with a known formula.

    - noiseless:        |b0|² t² sin²α
    - dephasing:        F^{2t} |b0|² t² sin²α (θ is ignored)
    - uniform_tilting:  (4/9) t² Z^{2t−2} sin²θ |b0|² / (1 − Z^{2t}|b0|²), Z = (1 + 2cos θ)/3
    - general_kT_zero:  the same with sin θ → F sin θ and Z = (1 + 2F cos θ)/3
    """
    try:
        regime = QfiRegime(regime)
    except ValueError as e:
        raise DomainError(f"Unknown closed-form regime: {regime!r}") from e
    t = _check_steps(t)
    r = float(b0_norm)
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"|b0| must lie in [0, 1], got: {b0_norm}")

    if regime is QfiRegime.NOISELESS:
        if not params.is_noiseless:
            raise RegimeMismatchError(f"noiseless closed form needs k_dephase = k_tilt = inf, got {params}")
        return r * r * t * t * math.sin(alpha) ** 2

    if regime is QfiRegime.DEPHASING:
        if not params.k_tilt.noiseless:
            raise RegimeMismatchError(f"dephasing closed form needs k_tilt = inf, got k_tilt = {params.k_tilt}")
        f = bessel_ratio(params.k_dephase)
        return f ** (2 * t) * r * r * t * t * math.sin(alpha) ** 2

    if theta is None:
        raise DomainError(f"{regime.value} closed form needs theta")
    th = check_angle(theta)
    if not params.k_tilt.is_uniform:
        raise RegimeMismatchError(f"{regime.value} closed form needs k_tilt = 0, got k_tilt = {params.k_tilt}")
    if regime is QfiRegime.UNIFORM_TILTING and not params.k_dephase.noiseless:
        raise RegimeMismatchError(
            f"uniform_tilting closed form needs k_dephase = inf, got {params.k_dephase}; use general_kT_zero"
        )
    return _isotropic_qfi(t, th, bessel_ratio(params.k_dephase), r)


def _dephasing_log_score(t: int, log_f: float) -> float:
    # log(F^{2t} t²)
    return 2.0 * t * log_f + 2.0 * math.log(t)


def optimal_steps_dephasing(k_dephase: ConcentrationLike) -> Tuple[float, int]:
    """(t_real, t_int) maximising F^{2t} t² with t_real = −1/ln F.

    ln F is taken as log1p(−(1 − F)) so t_real ≈ 2k stays accurate for large k.
    t_int is whichever neighbour of t_real scores higher (the smaller one on ties).
    """
    k = as_concentration(k_dephase)
    if k.noiseless:
        raise UnboundedOptimumError("Noiseless gate: the optimum is unbounded, the QFI grows as t² forever")
    if k.is_uniform:
        raise NoInformationError("k_dephase = 0: the rotation angle is uniformly random and carries no information")
    log_f = math.log1p(-bessel_ratio_complement(k))
    if not log_f < 0.0:
        raise NumericalError(f"k_dephase = {k}: ln F rounds to 0, no finite optimum is representable")
    t_real = -1.0 / log_f
    lo = max(1, math.floor(t_real))
    hi = max(1, math.ceil(t_real))
    t_int = lo if _dephasing_log_score(lo, log_f) >= _dephasing_log_score(hi, log_f) else hi
    return t_real, t_int


def dephasing_qfi(spec: GateSpec, k_dephase: ConcentrationLike, b0: InitialState, t: int) -> float:
    """QFI after t dephased gates, F^{2t} t² |b0⊥|², without evolving the state.

    b0⊥ is the part of b0 across the gate axis; the part along it never moves.
    """
    t = _check_steps(t)
    initial = initial_array(b0)
    if t == 0:
        return 0.0
    n = spec.axis_array()
    perp = initial - (initial @ n) * n
    complement = bessel_ratio_complement(k_dephase)
    if complement >= 1.0:
        return 0.0
    log_f = math.log1p(-complement)
    return math.exp(2.0 * t * log_f) * float(t) ** 2 * float(perp @ perp)


def decomposition_curves(
    spec: GateSpec,
    params: NoiseParams,
    b0: InitialState,
    t_max: int,
) -> DecompositionReport:
    """Split b0 along and across the gate axis and compare the summed QFIs with the full curve.

    `dephased` is the full state under dephasing alone (same k_dephase, k_tilt = inf).
    """
    initial = initial_array(b0)
    n = spec.axis_array()
    par = (initial @ n) * n
    perp = initial - par
    complete = qfi_curve(spec, params, initial, t_max, label="complete")
    dephased = qfi_curve(spec, NoiseParams.dephasing(params.k_dephase), initial, t_max, label="dephased")
    perpendicular = qfi_curve(spec, params, perp, t_max, label="perpendicular")
    parallel = qfi_curve(spec, params, par, t_max, label="parallel")
    return DecompositionReport(
        complete=complete,
        dephased=dephased,
        perpendicular=perpendicular,
        parallel=parallel,
        total=perpendicular.qfi + parallel.qfi,
    )
