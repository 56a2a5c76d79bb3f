"""
Modified Bessel functions of the first kind (integer order, real argument).

Values come from scipy.special; this module adds the domain checks, the
overflow guard and the Concentration sentinels on top.
"""

from __future__ import annotations

import math
import numbers

from scipy import special as sp

from config import BESSEL_ASYMPTOTIC_ARG, BESSEL_OVERFLOW_ARG
from domain.errors import DomainError, NumericalError
from domain.noise import ConcentrationLike, as_concentration


def _check_order(order: int) -> int:
    if isinstance(order, bool) or not isinstance(order, numbers.Integral):
        raise DomainError(f"Bessel order must be a non-negative integer, got: {order!r}")
    if order < 0:
        raise DomainError(f"Bessel order must be >= 0, got: {order}")
    return int(order)


def _check_argument(k: float) -> float:
    x = float(k)
    if math.isnan(x) or x < 0:
        raise DomainError(f"Bessel argument must be >= 0, got: {k}")
    if math.isinf(x):
        raise DomainError("Bessel argument must be finite; use bessel_ratio for the noiseless limit")
    return x


def bessel_i(order: int, k: float) -> float:
    """I_order(k).

    Raises NumericalError above BESSEL_OVERFLOW_ARG, where e^k no longer fits
    in a double; use `bessel_i_scaled` there.
    """
    n = _check_order(order)
    x = _check_argument(k)
    if x > BESSEL_OVERFLOW_ARG:
        raise NumericalError(
            f"I_{n}({x:g}) overflows double precision; use bessel_i_scaled (e^-k * I_n(k)) instead"
        )
    return float(sp.iv(n, x))


def _scaled_asymptotic(n: int, x: float) -> float:
    # e^-x I_n(x) ~ (2 pi x)^-1/2 * sum_j (-1)^j prod_{i<=j} (4n² - (2i-1)²) / (j! (8x)^j)
    mu = 4.0 * n * n
    term = total = 1.0
    for j in range(1, 6):
        term *= -(mu - (2 * j - 1) ** 2) / (j * 8.0 * x)
        total += term
    return total / math.sqrt(2.0 * math.pi * x)


def bessel_i_scaled(order: int, k: float) -> float:
    """e^{-k} · I_order(k), finite for every k ≥ 0.

    scipy's ive gives up (NaN) somewhere above 1e9; past BESSEL_ASYMPTOTIC_ARG
    the large-argument series takes over when that happens.
    """
    n = _check_order(order)
    x = _check_argument(k)
    value = float(sp.ive(n, x))
    if math.isfinite(value):
        return value
    if x >= BESSEL_ASYMPTOTIC_ARG:
        return _scaled_asymptotic(n, x)
    raise NumericalError(f"e^-k I_{n}({x:g}) is not finite")


def _ratio_complement_asymptotic(x: float) -> float:
    # 1 - I1/I0 = 1/(2x) + 1/(8x²) + 1/(8x³) + 25/(128x⁴) + O(x⁻⁵)
    u = 1.0 / x
    return u * (0.5 + u * (0.125 + u * (0.125 + u * (25.0 / 128.0))))


def bessel_ratio_complement(k: ConcentrationLike) -> float:
    """1 − F_k, without the cancellation of computing F_k first.

    Exactly 0 for the noiseless sentinel and exactly 1 at k = 0.
    """
    conc = as_concentration(k)
    if conc.noiseless:
        return 0.0
    if conc.is_uniform:
        return 1.0
    x = conc.value
    if x >= BESSEL_ASYMPTOTIC_ARG:
        return _ratio_complement_asymptotic(x)
    i0 = sp.ive(0, x)
    value = float((i0 - sp.ive(1, x)) / i0)
    if not math.isfinite(value):
        raise NumericalError(f"1 - I1/I0 at k = {x:g} is not finite")
    return value


def bessel_ratio(k: ConcentrationLike) -> float:
    """F_k = I1(k)/I0(k); exactly 1 for the noiseless sentinel and exactly 0 at k = 0."""
    conc = as_concentration(k)
    if conc.noiseless:
        return 1.0
    if conc.is_uniform:
        return 0.0
    x = conc.value
    if x >= BESSEL_ASYMPTOTIC_ARG:
        return 1.0 - _ratio_complement_asymptotic(x)
    # Both scaled values stay O(1/sqrt(k)), so the quotient never overflows.
    value = float(sp.ive(1, x) / sp.ive(0, x))
    if not math.isfinite(value):
        raise NumericalError(f"I1/I0 at k = {x:g} is not finite")
    return value
