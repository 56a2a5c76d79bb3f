"""
Repeated application of a noisy gate and the θ-derivative of the result.

The derivative of M^t is carried alongside b_t with the product rule
db_{t+1} = M·db_t + M'·b_t, which is O(t) overall.
"""

from __future__ import annotations

import math
from typing import Tuple, Union

import numpy as np

from channels import general_noisy_rotation_z_derivative
from domain.errors import DomainError
from domain.noise import ConcentrationLike, NoiseParams
from domain.records import EvolutionTrace
from domain.states import BlochVector, LinearMap3, Vector3, VectorLike, check_angle
from geometry import bloch_from_angles
from special import bessel_ratio

InitialState = Union[BlochVector, VectorLike]


def initial_array(b0: InitialState) -> Vector3:
    """Validate an initial state (norm ≤ 1) and return it as an array."""
    if isinstance(b0, BlochVector):
        return b0.as_array()
    return BlochVector.from_array(b0).as_array()


def map_derivative_z(theta: float, params: NoiseParams) -> LinearMap3:
    return general_noisy_rotation_z_derivative(theta, params)


def evolve(map_: LinearMap3, dmap: LinearMap3, b0: InitialState, t_max: int) -> EvolutionTrace:
    if t_max < 0:
        raise DomainError(f"t_max must be >= 0, got: {t_max}")
    m = np.asarray(map_, dtype=np.float64)
    dm = np.asarray(dmap, dtype=np.float64)
    if m.shape != (3, 3) or dm.shape != (3, 3):
        raise DomainError(f"map and dmap must be 3x3, got {m.shape} and {dm.shape}")

    bloch = np.empty((t_max + 1, 3))
    deriv = np.empty((t_max + 1, 3))
    bloch[0] = initial_array(b0)
    deriv[0] = 0.0
    for t in range(t_max):
        deriv[t + 1] = m @ deriv[t] + dm @ bloch[t]
        bloch[t + 1] = m @ bloch[t]
    return EvolutionTrace(bloch=bloch, derivative=deriv)


def dephasing_trajectory(
    t: int,
    theta: float,
    k_dephase: ConcentrationLike,
    radius: float = 1.0,
    alpha: float = math.pi / 2,
    gamma: float = 0.0,
) -> Tuple[Vector3, Vector3]:
    """Closed-form (b_t, ∂θ b_t) about ẑ under pure dephasing.

    The equatorial part turns by tθ and shrinks by F^t; the z part is untouched.
    """
    if t < 0:
        raise DomainError(f"t must be >= 0, got: {t}")
    th = check_angle(theta)
    bloch_from_angles(radius, alpha, gamma)
    f_t = bessel_ratio(k_dephase) ** t
    rho = radius * math.sin(alpha) * f_t
    phase = gamma + t * th
    b = np.array([rho * math.cos(phase), rho * math.sin(phase), radius * math.cos(alpha)])
    db = np.array([-t * rho * math.sin(phase), t * rho * math.cos(phase), 0.0])
    return b, db

