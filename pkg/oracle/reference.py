"""Independent reference values: Bessel power series, density series, finite differences, FI by summation."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np
from numpy.typing import NDArray

from domain.errors import DomainError, NumericalError
from domain.states import TWO_PI, Vector3, VectorLike, as_vector3
from special import bessel_i_scaled

_MAX_TERMS = 10_000


def bessel_i_series(order: int, k: float) -> float:
    """I_order(k) = Σ_m (k/2)^{2m+order} / (m! (m+order)!), summed until terms stop contributing."""
    if order < 0 or k < 0:
        raise DomainError(f"bessel_i_series needs order >= 0 and k >= 0, got ({order}, {k})")
    half = 0.5 * k
    term = half**order / math.factorial(order)
    total = term
    q = half * half
    for m in range(1, _MAX_TERMS):
        term *= q / (m * (m + order))
        total += term
        if term <= total * 1e-17:
            return total
    raise NumericalError(f"bessel_i_series({order}, {k}) did not converge")


def von_mises_density(eps: NDArray[np.float64] | float, k: float) -> NDArray[np.float64]:
    """e^{k cos ε} / (2π I0(k))."""
    return np.exp(k * (np.cos(eps) - 1.0)) / (TWO_PI * bessel_i_scaled(0, k))


def von_mises_density_series(eps: NDArray[np.float64] | float, k: float, terms: int) -> NDArray[np.float64]:
    """(1/2π)(1 + 2 Σ_{j=1}^{terms} I_j(k)/I_0(k) cos jε)."""
    eps = np.asarray(eps, dtype=np.float64)
    i0 = bessel_i_scaled(0, k)
    acc = np.ones_like(eps)
    for j in range(1, terms + 1):
        acc = acc + 2.0 * (bessel_i_scaled(j, k) / i0) * np.cos(j * eps)
    return acc / TWO_PI


def finite_difference_db(curve: Callable[[float], VectorLike], theta: float, step: float) -> Vector3:
    """Central difference (b(θ + h) − b(θ − h)) / 2h."""
    if not step > 0:
        raise DomainError(f"Finite-difference step must be > 0, got: {step}")
    if not (0.0 < theta - step and theta + step < TWO_PI):
        raise DomainError(f"theta ± step must stay inside (0, 2*pi), got theta={theta}, step={step}")
    hi = as_vector3(curve(theta + step), "b(theta+h)")
    lo = as_vector3(curve(theta - step), "b(theta-h)")
    return (hi - lo) / (2.0 * step)


def projective_fisher_by_summation(meas_axis: VectorLike, b: VectorLike, db: VectorLike) -> float:
    """Σ_± (∂θ p±)² / p± with p± = (1 ± m·b)/2, skipping outcomes with p = 0 and ∂p = 0."""
    m = as_vector3(meas_axis, "measurement axis")
    mb = float(m @ as_vector3(b, "b"))
    mdb = float(m @ as_vector3(db, "db"))
    total = 0.0
    for sign in (1.0, -1.0):
        p = 0.5 * (1.0 + sign * mb)
        dp = 0.5 * sign * mdb
        if p <= 0.0:
            if dp != 0.0:
                return math.inf
            continue
        total += dp * dp / p
    return total
