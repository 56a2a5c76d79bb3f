"""
Deterministic quadrature of the noisy-rotation integral.

The angle ε and the axis n are independent, so with ψ = θ + ε

    E[R_n(ψ)] = E[cos ψ] I + E[sin ψ] [E n]× + (1 − E[cos ψ]) E[n nᵀ].

E over ε uses the periodic trapezoid rule. E over n uses Gauss-Legendre in
u = cos ϕ times the periodic trapezoid rule in the azimuth. Node counts start
at QUAD_START_NODES and double until the entrywise change drops below QUAD_TOL.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from numpy.typing import NDArray
from scipy import special as sp

from config import QUAD_MAX_NODES, QUAD_START_NODES, QUAD_TOL
from domain.errors import NumericalError
from domain.noise import Concentration, ConcentrationLike, NoiseParams, as_concentration
from domain.states import LinearMap3, check_angle
from geometry import cross_matrix
from special import tilt_coefficients


def _periodic_nodes(n: int) -> NDArray[np.float64]:
    return -math.pi + 2.0 * math.pi * np.arange(n) / n


def _angle_moments(theta: float, k: Concentration, n: int) -> Tuple[float, float]:
    """(E[cos(θ + ε)], E[sin(θ + ε)]) for ε ~ von Mises(0, k)."""
    if k.noiseless:
        return math.cos(theta), math.sin(theta)
    eps = _periodic_nodes(n)
    if k.is_uniform:
        w = np.full(n, 1.0 / n)
    else:
        # e^{k cos ε} / (2π I0(k)) · (2π/n), with the e^{k} factored out of both.
        w = np.exp(k.value * (np.cos(eps) - 1.0)) / (n * sp.ive(0, k.value))
    psi = theta + eps
    return float(w @ np.cos(psi)), float(w @ np.sin(psi))


def _axis_moments(k: Concentration, n: int) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """(E[n], E[n nᵀ]) for n ~ von Mises-Fisher(ẑ, k) on S²."""
    if k.noiseless:
        z = np.array([0.0, 0.0, 1.0])
        return z, np.outer(z, z)
    u, gw = leggauss(n)
    if k.is_uniform:
        density = np.full(n, 1.0 / (4.0 * math.pi))
    else:
        # k e^{k(u − 1)} / (2π (1 − e^{−2k}))
        density = k.value * np.exp(k.value * (u - 1.0)) / (2.0 * math.pi * -math.expm1(-2.0 * k.value))
    phi = _periodic_nodes(n)
    s = np.sqrt(np.clip(1.0 - u * u, 0.0, None))
    # Axis grid of shape (n_u, n_phi, 3); weight per node = gw · density · 2π/n.
    axes = np.stack(
        (
            s[:, None] * np.cos(phi)[None, :],
            s[:, None] * np.sin(phi)[None, :],
            np.broadcast_to(u[:, None], (n, n)),
        ),
        axis=-1,
    )
    w = (gw * density)[:, None] * np.full(n, 2.0 * math.pi / n)[None, :]
    mean = np.einsum("ij,ijk->k", w, axes)
    second = np.einsum("ij,ijk,ijl->kl", w, axes, axes)
    return mean, second


def _average_map(theta: float, params: NoiseParams, n: int) -> LinearMap3:
    ec, es = _angle_moments(theta, params.k_dephase, n)
    mean, second = _axis_moments(params.k_tilt, n)
    return ec * np.eye(3) + es * cross_matrix(mean) + (1.0 - ec) * second


def _refine(evaluate: Callable[[int], NDArray[np.float64]], what: str) -> NDArray[np.float64]:
    n = QUAD_START_NODES
    previous = evaluate(n)
    while n < QUAD_MAX_NODES:
        n *= 2
        current = evaluate(n)
        if float(np.max(np.abs(current - previous))) < QUAD_TOL:
            return current
        previous = current
    raise NumericalError(f"{what}: quadrature did not converge to {QUAD_TOL:g} with {QUAD_MAX_NODES} nodes")


def quadrature_noisy_rotation(theta: float, params: NoiseParams) -> LinearMap3:
    th = check_angle(theta)
    return _refine(lambda n: _average_map(th, params, n), f"noisy rotation at theta={th:g}, {params}")


class IntegralCheck(NamedTuple):
    name: str
    numeric: float
    closed_form: float

    @property
    def abs_error(self) -> float:
        return abs(self.numeric - self.closed_form)


def tilt_integral_identities(k_tilt: ConcentrationLike) -> Tuple[IntegralCheck, ...]:
    """The three ϕ-integrals behind the tilting coefficients, by quadrature and in closed form.

    ∫₀^π k sin³ϕ e^{k cos ϕ}/(4π sinh k) dϕ         = (k coth k − 1)/(π k²)
    ∫₀^π k sin ϕ cos ϕ e^{k cos ϕ}/(4π sinh k) dϕ   = (k coth k − 1)/(2π k)
    ∫₀^π k sin ϕ cos²ϕ e^{k cos ϕ}/(4π sinh k) dϕ  = (k² − 2k coth k + 2)/(2π k²)
    """
    k = as_concentration(k_tilt)
    if not k.is_finite or k.is_uniform:
        raise NumericalError(f"Integral identities need a finite k_tilt > 0, got {k}")
    kv = k.value

    def integrals(n: int) -> NDArray[np.float64]:
        x, gw = leggauss(n)
        phi = 0.5 * math.pi * (x + 1.0)
        w = 0.5 * math.pi * gw
        # e^{k cos ϕ}/sinh k = 2 e^{k(cos ϕ − 1)}/(1 − e^{−2k})
        kernel = kv * 2.0 * np.exp(kv * (np.cos(phi) - 1.0)) / (4.0 * math.pi * -math.expm1(-2.0 * kv))
        s, c = np.sin(phi), np.cos(phi)
        return np.array([w @ (kernel * s**3), w @ (kernel * s * c), w @ (kernel * s * c * c)])

    numeric = _refine(integrals, f"tilt integrals at k={kv:g}")
    a, b, c = tilt_coefficients(k)
    return (
        IntegralCheck("sin^3", float(numeric[0]), a / math.pi),
        IntegralCheck("sin*cos", float(numeric[1]), b / (2.0 * math.pi)),
        IntegralCheck("sin*cos^2", float(numeric[2]), c / (2.0 * math.pi)),
    )
