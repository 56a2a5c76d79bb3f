"""
Samplers for the two noise laws.

- Dephasing angle ε ~ von Mises(0, k): numpy's Generator.vonmises (Best-Fisher rejection).
- Tilted axis n ~ von Mises-Fisher(ẑ, k) on S²: exact inverse CDF of the polar cosine,
  cos ϕ = 1 + ln(u + (1 − u) e^{−2k}) / k, with a uniform azimuth.

k = 0 callers use the uniform_* samplers directly.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import NDArray

from domain.errors import DomainError


def _check_positive(k: float) -> float:
    x = float(k)
    if math.isnan(x) or x <= 0 or math.isinf(x):
        raise DomainError(f"Sampling needs a finite concentration k > 0, got: {k}")
    return x


def von_mises_angles(k: float, size: int, rng: np.random.Generator) -> NDArray[np.float64]:
    x = _check_positive(k)
    eps = rng.vonmises(0.0, x, size)
    # numpy returns [−π, π]; fold −π onto π.
    eps[eps <= -math.pi] += 2.0 * math.pi
    return eps


def uniform_angles(size: int, rng: np.random.Generator) -> NDArray[np.float64]:
    return math.pi - 2.0 * math.pi * rng.random(size)


def _axes_from_cosines(cos_phi: NDArray[np.float64], rng: np.random.Generator) -> NDArray[np.float64]:
    azimuth = 2.0 * math.pi * rng.random(cos_phi.shape[0])
    sin_phi = np.sqrt(np.clip(1.0 - cos_phi * cos_phi, 0.0, None))
    return np.column_stack((sin_phi * np.cos(azimuth), sin_phi * np.sin(azimuth), cos_phi))


def vmf_axes(k: float, size: int, rng: np.random.Generator) -> NDArray[np.float64]:
    """(size, 3) unit axes drawn around ẑ."""
    x = _check_positive(k)
    u = rng.random(size)
    # ln(u + (1 − u) e^{−2k}) = log1p((1 − u)(e^{−2k} − 1)), stable for small k.
    cos_phi = 1.0 + np.log1p((1.0 - u) * math.expm1(-2.0 * x)) / x
    return _axes_from_cosines(np.clip(cos_phi, -1.0, 1.0), rng)


def uniform_axes(size: int, rng: np.random.Generator) -> NDArray[np.float64]:
    return _axes_from_cosines(1.0 - 2.0 * rng.random(size), rng)


def sample_von_mises(k: float, rng: np.random.Generator) -> float:
    """One angle in (−π, π]."""
    return float(von_mises_angles(k, 1, rng)[0])


def sample_vmf_axis(k: float, rng: np.random.Generator) -> NDArray[np.float64]:
    """One unit axis around ẑ."""
    return vmf_axes(k, 1, rng)[0]
