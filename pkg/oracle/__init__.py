"""Independent oracles: sampling, Monte Carlo averages, quadrature and reference series."""

from .monte_carlo import mc_noisy_rotation
from .quadrature import IntegralCheck, quadrature_noisy_rotation, tilt_integral_identities
from .reference import (
    bessel_i_series,
    finite_difference_db,
    projective_fisher_by_summation,
    von_mises_density,
    von_mises_density_series,
)
from .sampling import (
    sample_vmf_axis,
    sample_von_mises,
    uniform_angles,
    uniform_axes,
    vmf_axes,
    von_mises_angles,
)

__all__ = [
    "sample_von_mises",
    "sample_vmf_axis",
    "von_mises_angles",
    "vmf_axes",
    "uniform_angles",
    "uniform_axes",
    "mc_noisy_rotation",
    "quadrature_noisy_rotation",
    "tilt_integral_identities",
    "IntegralCheck",
    "bessel_i_series",
    "von_mises_density",
    "von_mises_density_series",
    "finite_difference_db",
    "projective_fisher_by_summation",
]
