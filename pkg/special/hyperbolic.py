"""
Hyperbolic helpers for the tilting (von Mises-Fisher) coefficients.

With L(k) = coth k - 1/k (the Langevin function, which is also the mean
cosine of a von Mises-Fisher axis on the sphere):

    A = L(k)/k,   B = L(k),   C = 1 - 2A

Below TILT_SERIES_THRESHOLD A is taken from its Taylor series, since
coth k - 1/k cancels catastrophically for small k.
"""

from __future__ import annotations

import math
from typing import Tuple

from config import COTH_SERIES_THRESHOLD, TILT_SERIES_THRESHOLD
from domain.errors import DomainError
from domain.noise import ConcentrationLike, as_concentration

# A(k) = 1/3 - k²/45 + 2k⁴/945 - k⁶/4725 + 2k⁸/93555 + O(k¹⁰)
_A_SERIES = (1.0 / 3.0, -1.0 / 45.0, 2.0 / 945.0, -1.0 / 4725.0, 2.0 / 93555.0)


def coth(k: float) -> float:
    x = float(k)
    if math.isnan(x) or x <= 0:
        raise DomainError(f"coth requires k > 0, got: {k}")
    if x < COTH_SERIES_THRESHOLD:
        return 1.0 / x + x / 3.0 - x**3 / 45.0
    return 1.0 / math.tanh(x)


def _tilt_a_series(x: float) -> float:
    x2 = x * x
    acc = 0.0
    for c in reversed(_A_SERIES):
        acc = acc * x2 + c
    return acc


def _tilt_a_direct(x: float) -> float:
    return (coth(x) - 1.0 / x) / x


def _tilt_a(x: float) -> float:
    return _tilt_a_series(x) if x < TILT_SERIES_THRESHOLD else _tilt_a_direct(x)


def vmf_mean_cosine(k: ConcentrationLike) -> float:
    """E[cos ϕ] of a von Mises-Fisher axis on S² (1 when noiseless, 0 when uniform)."""
    conc = as_concentration(k)
    if conc.noiseless:
        return 1.0
    if conc.is_uniform:
        return 0.0
    return conc.value * _tilt_a(conc.value)


def tilt_coefficients(k_tilt: ConcentrationLike) -> Tuple[float, float, float]:
    """(A, B, C) for the tilted rotation; (0, 1, 1) when noiseless, (1/3, 0, 1/3) when uniform."""
    conc = as_concentration(k_tilt)
    if conc.noiseless:
        return 0.0, 1.0, 1.0
    if conc.is_uniform:
        return 1.0 / 3.0, 0.0, 1.0 / 3.0
    a = _tilt_a(conc.value)
    return a, conc.value * a, 1.0 - 2.0 * a
