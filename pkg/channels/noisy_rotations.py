"""
Noise-averaged rotation maps ("noisy rotations") about ẑ and about a general axis.

Every z-axis map is axially symmetric and has the shape

    [ F c + A (1 - F c)    -B F s               0                  ]
    [ B F s                 F c + A (1 - F c)   0                  ]
    [ 0                     0                   F c + C (1 - F c)  ]

with c = cos θ, s = sin θ, F = I1(k_D)/I0(k_D) and (A, B, C) the tilting
coefficients of k_T. Pure dephasing (A, B, C) = (0, 1, 1) and pure tilting
F = 1 go through the same arithmetic, so the limits agree bit for bit.
"""

from __future__ import annotations

import math

import numpy as np

from domain.noise import ConcentrationLike, NoiseParams, as_concentration
from domain.states import GateSpec, LinearMap3, check_angle
from geometry import align_axis_to_z, conjugate
from special import bessel_ratio, tilt_coefficients


def _z_map(c: float, s: float, f: float, params: NoiseParams) -> LinearMap3:
    fc = f * c
    if params.k_tilt.is_uniform:
        return ((1.0 + 2.0 * fc) / 3.0) * np.eye(3)
    a, b, cc = tilt_coefficients(params.k_tilt)
    diag = fc + a * (1.0 - fc)
    # C == 1 only for the noiseless axis, where the z entry is exactly 1.
    zz = 1.0 if cc == 1.0 else fc + cc * (1.0 - fc)
    bfs = b * f * s
    return np.array(
        [
            [diag, -bfs, 0.0],
            [bfs, diag, 0.0],
            [0.0, 0.0, zz],
        ]
    )


def _z_map_derivative(c: float, s: float, f: float, params: NoiseParams) -> LinearMap3:
    a, b, cc = tilt_coefficients(params.k_tilt)
    bfc = b * f * c
    return np.array(
        [
            [-f * s * (1.0 - a), -bfc, 0.0],
            [bfc, -f * s * (1.0 - a), 0.0],
            [0.0, 0.0, -f * s * (1.0 - cc)],
        ]
    )


def general_noisy_rotation_z(theta: float, params: NoiseParams) -> LinearMap3:
    th = check_angle(theta)
    return _z_map(math.cos(th), math.sin(th), bessel_ratio(params.k_dephase), params)


def dephased_rotation_z(theta: float, k_dephase: ConcentrationLike) -> LinearMap3:
    return general_noisy_rotation_z(theta, NoiseParams.dephasing(as_concentration(k_dephase)))


def tilted_rotation_z(theta: float, k_tilt: ConcentrationLike) -> LinearMap3:
    k = as_concentration(k_tilt)
    if k.is_uniform:
        return uniform_tilting(theta)
    return general_noisy_rotation_z(theta, NoiseParams.tilting(k))


def uniform_tilting(theta: float) -> LinearMap3:
    """((1 + 2 cos θ)/3) · I: the rotation axis is uniformly random."""
    th = check_angle(theta)
    return ((1.0 + 2.0 * math.cos(th)) / 3.0) * np.eye(3)


def general_noisy_rotation_z_derivative(theta: float, params: NoiseParams) -> LinearMap3:
    """Entrywise d/dθ of `general_noisy_rotation_z`."""
    th = check_angle(theta)
    return _z_map_derivative(math.cos(th), math.sin(th), bessel_ratio(params.k_dephase), params)


def noisy_rotation(spec: GateSpec, params: NoiseParams) -> LinearMap3:
    return conjugate(general_noisy_rotation_z(spec.theta, params), align_axis_to_z(spec.axis))


def noisy_rotation_derivative(spec: GateSpec, params: NoiseParams) -> LinearMap3:
    """d/dθ of `noisy_rotation`; the basis change does not depend on θ."""
    return conjugate(
        general_noisy_rotation_z_derivative(spec.theta, params),
        align_axis_to_z(spec.axis),
    )
