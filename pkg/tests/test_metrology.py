import math

import numpy as np
import pytest

from channels import (
    general_noisy_rotation_z,
    general_noisy_rotation_z_derivative,
    noisy_rotation,
    noisy_rotation_derivative,
)
from domain.errors import (
    DomainError,
    NoInformationError,
    RegimeMismatchError,
    UnboundedOptimumError,
    UndefinedFisherInformationError,
)
from domain.noise import NoiseParams
from domain.states import GateSpec
from geometry import align_axis_to_z, bloch_from_angles
from metrology import (
    QfiRegime,
    classical_fi_projective,
    closed_form_qfi,
    decomposition_curves,
    dephasing_qfi,
    dephasing_trajectory,
    evolve,
    optimal_steps_dephasing,
    qfi_curve,
    qfi_from_bloch,
)
from oracle import projective_fisher_by_summation
from special import bessel_ratio

X = (1.0, 0.0, 0.0)


def test_evolve_zero_steps_and_shapes():
    m = general_noisy_rotation_z(1.0, NoiseParams.dephasing(2.0))
    dm = general_noisy_rotation_z_derivative(1.0, NoiseParams.dephasing(2.0))
    trace = evolve(m, dm, X, 0)
    assert trace.t_max == 0
    np.testing.assert_array_equal(trace.derivative[0], np.zeros(3))
    trace = evolve(m, dm, X, 7)
    assert trace.bloch.shape == (8, 3)
    assert len(list(trace.steps)) == 8
    with pytest.raises(DomainError):
        evolve(m, dm, X, -1)
    with pytest.raises(DomainError):
        evolve(m, dm, (1.0, 1.0, 0.0), 3)


def test_evolve_matches_matrix_powers():
    params = NoiseParams(1.5, 4.0)
    m = general_noisy_rotation_z(0.7, params)
    dm = general_noisy_rotation_z_derivative(0.7, params)
    b0 = np.array([0.3, -0.4, 0.5])
    trace = evolve(m, dm, b0, 12)
    np.testing.assert_allclose(trace.bloch[12], np.linalg.matrix_power(m, 12) @ b0, atol=1e-14)


def test_evolve_derivative_matches_dephasing_trajectory():
    theta, kd, alpha, gamma = 0.9, 3.0, math.pi / 3, 0.4
    b0 = bloch_from_angles(0.8, alpha, gamma)
    params = NoiseParams.dephasing(kd)
    trace = evolve(
        general_noisy_rotation_z(theta, params), general_noisy_rotation_z_derivative(theta, params), b0, 15
    )
    for t in (0, 1, 6, 15):
        b, db = dephasing_trajectory(t, theta, kd, 0.8, alpha, gamma)
        np.testing.assert_allclose(trace.bloch[t], b, atol=1e-13)
        np.testing.assert_allclose(trace.derivative[t], db, atol=1e-12)


def test_qfi_from_bloch_branches():
    # pure state: |db|^2
    assert qfi_from_bloch((1.0, 0.0, 0.0), (0.0, 2.0, 0.0)) == pytest.approx(4.0)
    # mixed state adds (b.db)^2 / (1 - |b|^2)
    assert qfi_from_bloch((0.6, 0.0, 0.0), (0.5, 0.0, 0.0)) == pytest.approx(0.25 + 0.09 / 0.64)
    # maximally mixed state with zero derivative
    assert qfi_from_bloch((0.0, 0.0, 0.0), (0.0, 0.0, 0.0)) == 0.0
    with pytest.raises(DomainError):
        qfi_from_bloch((1.0, 0.5, 0.0), (0.0, 0.0, 0.0))


def test_noiseless_qfi_grows_quadratically():
    for theta in (math.pi / 8, math.pi / 4, math.pi / 2):
        series = qfi_curve(GateSpec.z(theta), NoiseParams.noiseless(), X, 100)
        np.testing.assert_allclose(series.qfi, series.t.astype(float) ** 2, rtol=0, atol=1e-9)


@pytest.mark.parametrize("kd", [0.5, 1.0, 3.0, 10.0])
@pytest.mark.parametrize("alpha", [math.pi / 4, math.pi / 2])
def test_dephasing_pipeline_matches_closed_form(kd, alpha):
    params = NoiseParams.dephasing(kd)
    series = qfi_curve(GateSpec.z(math.pi / 4), params, bloch_from_angles(1.0, alpha, 0.0), 200)
    expected = np.array([closed_form_qfi("dephasing", t, None, params, 1.0, alpha) for t in range(201)])
    mask = expected > 0
    np.testing.assert_allclose(series.qfi[mask], expected[mask], rtol=1e-10)
    assert series.qfi[0] == 0.0


def test_uniform_tilting_closed_form_values():
    params = NoiseParams(math.inf, 0.0)
    assert closed_form_qfi(QfiRegime.UNIFORM_TILTING, 1, 1e-6, params) == pytest.approx(2.0 / 3.0, abs=1e-6)
    assert closed_form_qfi(QfiRegime.UNIFORM_TILTING, 1, math.pi / 2, params) == pytest.approx(0.5, abs=1e-12)
    assert closed_form_qfi(QfiRegime.UNIFORM_TILTING, 0, 1.0, params) == 0.0


@pytest.mark.parametrize("kd", [math.inf, 1.0, 3.0])
@pytest.mark.parametrize("theta", [math.pi / 8, math.pi / 4, math.pi / 2])
def test_isotropic_pipeline_matches_closed_form(kd, theta):
    params = NoiseParams(kd, 0.0)
    regime = "uniform_tilting" if math.isinf(kd) else "general_kT_zero"
    series = qfi_curve(GateSpec.z(theta), params, X, 100)
    expected = np.array([closed_form_qfi(regime, t, theta, params) for t in range(101)])
    mask = expected > 0
    np.testing.assert_allclose(series.qfi[mask], expected[mask], rtol=1e-10)


def test_closed_form_mixed_initial_state():
    params = NoiseParams(math.inf, 0.0)
    series = qfi_curve(GateSpec.z(1.0), params, (0.5, 0.0, 0.0), 30)
    expected = [closed_form_qfi("uniform_tilting", t, 1.0, params, b0_norm=0.5) for t in range(31)]
    np.testing.assert_allclose(series.qfi[1:], expected[1:], rtol=1e-10)


def test_closed_form_regime_mismatches():
    with pytest.raises(RegimeMismatchError):
        closed_form_qfi("noiseless", 3, 1.0, NoiseParams.dephasing(2.0))
    with pytest.raises(RegimeMismatchError):
        closed_form_qfi("dephasing", 3, 1.0, NoiseParams(2.0, 5.0))
    with pytest.raises(RegimeMismatchError):
        closed_form_qfi("uniform_tilting", 3, 1.0, NoiseParams(2.0, 0.0))
    with pytest.raises(RegimeMismatchError):
        closed_form_qfi("general_kT_zero", 3, 1.0, NoiseParams(2.0, 1.0))
    with pytest.raises(DomainError):
        closed_form_qfi("bogus", 3, 1.0, NoiseParams())


def test_dephasing_closed_form_ignores_theta():
    params = NoiseParams.dephasing(3.0)
    f = bessel_ratio(3.0)
    assert closed_form_qfi("dephasing", 4, None, params) == pytest.approx(f**8 * 16)
    assert closed_form_qfi("dephasing", 4, 2.0, params) == closed_form_qfi("dephasing", 4, None, params)


def test_optimal_steps_dephasing():
    t_real, t_int = optimal_steps_dephasing(3.0)
    assert t_real == pytest.approx(-1.0 / math.log(bessel_ratio(3.0)), rel=1e-12)
    assert t_real == pytest.approx(4.745, abs=1e-3)
    assert t_int == 5
    with pytest.raises(UnboundedOptimumError):
        optimal_steps_dephasing(math.inf)
    with pytest.raises(NoInformationError):
        optimal_steps_dephasing(0.0)


@pytest.mark.parametrize("kd", [0.5, 1.0, 3.0, 10.0])
def test_optimal_steps_is_the_argmax(kd):
    _, t_int = optimal_steps_dephasing(kd)
    series = qfi_curve(GateSpec.z(math.pi / 4), NoiseParams.dephasing(kd), X, 4 * t_int + 10)
    assert series.argmax() == t_int


def test_optimal_steps_small_concentration_is_at_least_one():
    t_real, t_int = optimal_steps_dephasing(0.05)
    assert t_real < 1.0
    assert t_int == 1


def test_qfi_is_invariant_under_axis_rotation(rng, random_axes):
    params = NoiseParams(2.0, 6.0)
    for n in random_axes:
        b0 = rng.normal(size=3)
        b0 *= 0.9 / np.linalg.norm(b0)
        general = qfi_curve(GateSpec(tuple(n), 1.1), params, b0, 20)
        aligned = qfi_curve(GateSpec.z(1.1), params, align_axis_to_z(n) @ b0, 20)
        np.testing.assert_allclose(general.qfi, aligned.qfi, rtol=0, atol=1e-9)


def test_decomposition_curves():
    b0 = np.array([0.0, 1.0, 4.0]) / math.sqrt(17.0)
    report = decomposition_curves(GateSpec.z(math.pi / 8), NoiseParams(3.0, 10.0), b0, 40)
    np.testing.assert_allclose(report.total, report.perpendicular.qfi + report.parallel.qfi)
    np.testing.assert_allclose(report.perpendicular.initial, [0.0, 1.0 / math.sqrt(17.0), 0.0], atol=1e-16)
    np.testing.assert_allclose(report.parallel.initial, [0.0, 0.0, 4.0 / math.sqrt(17.0)], atol=1e-16)
    assert report.dephased.noise.k_tilt.noiseless
    assert [s.label for s in (report.complete, report.dephased, report.perpendicular, report.parallel)] == [
        "complete",
        "dephased",
        "perpendicular",
        "parallel",
    ]
    assert report.max_abs_deviation >= 0.0


def test_classical_fisher_matches_summation(rng):
    params = NoiseParams(2.0, 5.0)
    trace = evolve(
        general_noisy_rotation_z(0.8, params), general_noisy_rotation_z_derivative(0.8, params), (0.6, 0.0, 0.7), 5
    )
    b, db = trace.bloch[5], trace.derivative[5]
    for _ in range(20):
        m = rng.normal(size=3)
        m /= np.linalg.norm(m)
        fi = classical_fi_projective(m, b, db)
        assert fi == pytest.approx(projective_fisher_by_summation(m, b, db), rel=1e-12)
        assert fi <= qfi_from_bloch(b, db) + 1e-12


def test_classical_fisher_saturates_for_tangent_measurement():
    trace = evolve(
        general_noisy_rotation_z(math.pi / 4, NoiseParams()),
        general_noisy_rotation_z_derivative(math.pi / 4, NoiseParams()),
        X,
        6,
    )
    b, db = trace.bloch[6], trace.derivative[6]
    m = db / np.linalg.norm(db)
    assert classical_fi_projective(m, b, db) == pytest.approx(qfi_from_bloch(b, db), abs=1e-9)


def test_classical_fisher_deterministic_outcome():
    assert classical_fi_projective((1.0, 0.0, 0.0), X, (0.0, 1.0, 0.0)) == 0.0
    with pytest.raises(UndefinedFisherInformationError):
        classical_fi_projective((1.0, 0.0, 0.0), X, (0.3, 1.0, 0.0))
    with pytest.raises(DomainError):
        classical_fi_projective((2.0, 0.0, 0.0), X, (0.0, 1.0, 0.0))


@pytest.mark.parametrize("kd", [1e6, 1e10, 1e15, 1e17])
def test_optimal_steps_for_large_concentration(kd):
    t_real, t_int = optimal_steps_dephasing(kd)
    assert math.isfinite(t_real)
    assert t_real == pytest.approx(2.0 * kd, rel=1e-5)
    assert math.floor(t_real) <= t_int <= math.ceil(t_real)


def test_dephasing_qfi_matches_the_evolved_curve():
    spec = GateSpec.about((1.0, 2.0, 2.0), 0.7)
    b0 = (0.3, -0.4, 0.5)
    series = qfi_curve(spec, NoiseParams.dephasing(3.0), b0, 30)
    closed = [dephasing_qfi(spec, 3.0, b0, t) for t in range(31)]
    np.testing.assert_allclose(series.qfi, closed, rtol=1e-10, atol=1e-14)
    assert dephasing_qfi(spec, 0.0, b0, 4) == 0.0
    assert dephasing_qfi(GateSpec.z(1.0), math.inf, X, 7) == 49.0


def test_dephasing_qfi_at_a_huge_step_count():
    _, t_int = optimal_steps_dephasing(1e9)
    qfi = dephasing_qfi(GateSpec.z(math.pi / 4), 1e9, X, t_int)
    # F^{2t} -> e^{-2} at t ~ 2k
    assert qfi == pytest.approx(t_int**2 * math.exp(-2.0), rel=1e-6)


@pytest.mark.parametrize("params", [NoiseParams(1.5, 4.0), NoiseParams.dephasing(3.0), NoiseParams(math.inf, 2.0)])
def test_bloch_length_never_grows(params):
    spec = GateSpec.about((0.2, -0.5, 1.0), 0.9)
    trace = evolve(
        noisy_rotation(spec, params), noisy_rotation_derivative(spec, params), (0.3, 0.6, -0.7), 60
    )
    norms = np.linalg.norm(trace.bloch, axis=1)
    assert np.all(np.diff(norms) <= 1e-14)


def test_dephasing_curve_does_not_depend_on_theta():
    params = NoiseParams.dephasing(3.0)
    curves = [qfi_curve(GateSpec.z(theta), params, X, 60).qfi for theta in (math.pi / 8, math.pi / 4, math.pi / 2)]
    np.testing.assert_allclose(curves[0], curves[1], rtol=1e-10)
    np.testing.assert_allclose(curves[0], curves[2], rtol=1e-10)


def test_near_pure_state_uses_the_pure_branch():
    # Z = (1 + 2cos θ)/3 leaves 1 - |b|² ~ 7e-13 < PURITY_EPS, so only |db|² is kept;
    # the 2/3 limit is reached through closed_form_qfi.
    theta = 1e-6
    params = NoiseParams(math.inf, 0.0)
    series = qfi_curve(GateSpec.z(theta), params, X, 1)
    assert series.qfi[1] == pytest.approx((2.0 / 3.0 * math.sin(theta)) ** 2, rel=1e-6)
    assert series.qfi[1] < 1e-12
    assert closed_form_qfi("uniform_tilting", 1, theta, params) == pytest.approx(2.0 / 3.0, abs=1e-6)
