"""Special functions used by the noise models."""

from .bessel import bessel_i, bessel_i_scaled, bessel_ratio, bessel_ratio_complement
from .hyperbolic import coth, tilt_coefficients, vmf_mean_cosine

__all__ = [
    "bessel_i",
    "bessel_i_scaled",
    "bessel_ratio",
    "bessel_ratio_complement",
    "coth",
    "tilt_coefficients",
    "vmf_mean_cosine",
]
