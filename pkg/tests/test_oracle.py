import math

import numpy as np
import pytest
from scipy import stats

from channels import general_noisy_rotation_z, noisy_rotation
from domain.errors import DomainError, NumericalError
from domain.noise import NoiseParams
from domain.states import GateSpec
from oracle import (
    bessel_i_series,
    finite_difference_db,
    mc_noisy_rotation,
    quadrature_noisy_rotation,
    sample_vmf_axis,
    sample_von_mises,
    tilt_integral_identities,
    uniform_axes,
    vmf_axes,
    von_mises_angles,
    von_mises_density,
    von_mises_density_series,
)
from special import bessel_i, bessel_ratio, vmf_mean_cosine

GRID = [
    (theta, NoiseParams(kd, kt))
    for theta in (math.pi / 8, math.pi / 4, math.pi / 2)
    for kd in (1.0, 3.0, math.inf)
    for kt in (1.0, 7.0, math.inf)
    if not (math.isinf(kd) and math.isinf(kt))
]


def test_von_mises_angles_range_and_mean(rng):
    eps = von_mises_angles(3.0, 200_000, rng)
    assert np.all(eps > -math.pi) and np.all(eps <= math.pi)
    assert np.mean(np.cos(eps)) == pytest.approx(bessel_ratio(3.0), abs=5e-3)
    assert abs(np.mean(np.sin(eps))) < 5e-3


def test_von_mises_angles_chi_square(rng):
    k = 2.0
    eps = von_mises_angles(k, 100_000, rng)
    edges = np.linspace(-math.pi, math.pi, 41)
    observed, _ = np.histogram(eps, bins=edges)
    # bin probabilities from the cosine-series density, integrated by a fine midpoint rule
    fine = np.linspace(-math.pi, math.pi, 40 * 200 + 1)
    mids = 0.5 * (fine[1:] + fine[:-1])
    mass = von_mises_density_series(mids, k, 40) * (fine[1] - fine[0])
    expected = mass.reshape(40, 200).sum(axis=1)
    expected *= eps.size / expected.sum()
    _, p = stats.chisquare(observed, expected)
    assert p > 1e-4


def test_von_mises_density_series_converges_to_closed_density():
    eps = np.linspace(-math.pi, math.pi, 101)
    np.testing.assert_allclose(von_mises_density_series(eps, 3.0, 60), von_mises_density(eps, 3.0), atol=1e-12)


@pytest.mark.parametrize("j", [1, 2, 3])
def test_von_mises_harmonics_are_bessel_ratios(rng, j):
    k = 3.0
    expected = bessel_i(j, k) / bessel_i(0, k)
    # periodic trapezoid over the closed density is exact to rounding
    eps = np.linspace(-math.pi, math.pi, 256, endpoint=False)
    weighted = np.mean(von_mises_density(eps, k) * np.cos(j * eps)) * 2.0 * math.pi
    assert weighted == pytest.approx(expected, abs=1e-13)
    sampled = np.mean(np.cos(j * von_mises_angles(k, 200_000, rng)))
    assert sampled == pytest.approx(expected, abs=1e-2)


def test_vmf_azimuth_is_uniform(rng):
    axes = vmf_axes(4.0, 50_000, rng)
    azimuth = np.mod(np.arctan2(axes[:, 1], axes[:, 0]), 2.0 * math.pi)
    _, p = stats.kstest(azimuth, "uniform", args=(0.0, 2.0 * math.pi))
    assert p > 1e-4


def test_vmf_axes_are_unit_with_langevin_mean(rng):
    axes = vmf_axes(5.0, 200_000, rng)
    np.testing.assert_allclose(np.linalg.norm(axes, axis=1), 1.0, atol=1e-12)
    assert axes[:, 2].mean() == pytest.approx(vmf_mean_cosine(5.0), abs=3e-3)
    assert abs(axes[:, 0].mean()) < 5e-3


def test_vmf_cosine_follows_truncated_exponential(rng):
    k = 4.0
    cos_phi = vmf_axes(k, 50_000, rng)[:, 2]

    def cdf(u):
        return np.expm1(k * (u + 1.0)) / math.expm1(2.0 * k)

    _, p = stats.kstest(cos_phi, cdf)
    assert p > 1e-4


def test_uniform_axes_have_uniform_cosine(rng):
    cos_phi = uniform_axes(50_000, rng)[:, 2]
    _, p = stats.kstest(cos_phi, stats.uniform(loc=-1.0, scale=2.0).cdf)
    assert p > 1e-4


def test_single_draws_and_bad_concentration(rng):
    assert -math.pi < sample_von_mises(1.0, rng) <= math.pi
    assert np.linalg.norm(sample_vmf_axis(1.0, rng)) == pytest.approx(1.0)
    for k in (0.0, -1.0, math.inf):
        with pytest.raises(DomainError):
            vmf_axes(k, 10, rng)


@pytest.mark.parametrize("theta, params", GRID)
def test_quadrature_matches_analytic(theta, params):
    np.testing.assert_allclose(
        quadrature_noisy_rotation(theta, params), general_noisy_rotation_z(theta, params), rtol=0, atol=1e-8
    )


def test_quadrature_with_uniform_noise():
    for params in (NoiseParams(0.0, 3.0), NoiseParams(2.0, 0.0)):
        np.testing.assert_allclose(
            quadrature_noisy_rotation(1.0, params), general_noisy_rotation_z(1.0, params), rtol=0, atol=1e-8
        )


@pytest.mark.parametrize("k", [0.5, 1.0, 7.0, 10.0])
def test_tilt_integral_identities(k):
    for check in tilt_integral_identities(k):
        assert check.abs_error < 1e-10, check


def test_tilt_integral_identities_need_finite_positive_k():
    with pytest.raises(NumericalError):
        tilt_integral_identities(math.inf)


def test_monte_carlo_is_reproducible_and_independent_of_workers():
    params = NoiseParams(3.0, 7.0)
    a = mc_noisy_rotation(math.pi / 4, params, 150_000, seed=7, max_workers=1)
    b = mc_noisy_rotation(math.pi / 4, params, 150_000, seed=7, max_workers=4)
    np.testing.assert_array_equal(a.mean_map, b.mean_map)
    np.testing.assert_array_equal(a.stderr_map, b.stderr_map)
    c = mc_noisy_rotation(math.pi / 4, params, 150_000, seed=8)
    assert not np.array_equal(a.mean_map, c.mean_map)


def test_monte_carlo_noiseless_is_exact():
    axis = np.array([1.0, 2.0, 2.0]) / 3.0
    est = mc_noisy_rotation(1.0, NoiseParams(), 10, seed=1, axis=axis)
    np.testing.assert_allclose(est.mean_map, noisy_rotation(GateSpec(tuple(axis), 1.0), NoiseParams()), atol=1e-15)
    assert not est.stderr_map.any()


def test_monte_carlo_rejects_bad_sample_counts():
    with pytest.raises(DomainError):
        mc_noisy_rotation(1.0, NoiseParams.dephasing(1.0), 0)


@pytest.mark.slow
@pytest.mark.parametrize("theta, params", GRID)
def test_monte_carlo_matches_analytic(theta, params):
    est = mc_noisy_rotation(theta, params, 1_000_000, seed=2024)
    assert est.agrees_with(general_noisy_rotation_z(theta, params), n_sigma=5.0)


@pytest.mark.slow
def test_monte_carlo_about_a_general_axis():
    axis = np.array([2.0, -1.0, 2.0]) / 3.0
    params = NoiseParams(2.0, 4.0)
    est = mc_noisy_rotation(0.9, params, 400_000, seed=3, axis=axis)
    assert est.agrees_with(noisy_rotation(GateSpec(tuple(axis), 0.9), params), n_sigma=5.0)


def test_bessel_series_known_values():
    assert bessel_i_series(0, 0.0) == 1.0
    assert bessel_i_series(0, 1.0) == pytest.approx(1.2660658777520082, rel=1e-15)
    assert bessel_i_series(1, 1.0) == pytest.approx(0.5651591039924851, rel=1e-15)


def test_finite_difference_db():
    fd = finite_difference_db(lambda th: (math.cos(th), math.sin(th), 0.0), 1.0, 1e-6)
    np.testing.assert_allclose(fd, [-math.sin(1.0), math.cos(1.0), 0.0], atol=1e-9)
    with pytest.raises(DomainError):
        finite_difference_db(lambda th: (0.0, 0.0, 0.0), 1e-7, 1e-6)
