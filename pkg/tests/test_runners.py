import math

import numpy as np
import pytest

from domain.errors import ConfigError, RegimeMismatchError, UnboundedOptimumError
from domain.noise import NoiseParams
from domain.run_config import AngleState, RunConfig, Sweep
from domain.states import GateSpec
from metrology import optimal_steps_dephasing, qfi_curve
from special import bessel_ratio
from runners import (
    SUITES,
    ValidationOptions,
    compute_sweep,
    resolve_point,
    run_evolve,
    run_matrix,
    run_optimal,
    run_qfi,
    run_validation,
)
from runners.validation import (
    check_closed_forms,
    check_finite_differences,
    check_fisher_bound,
    check_integral_identities,
    check_monte_carlo,
    check_quadrature,
    check_rotation_invariance,
    check_special_functions,
)


def _config(**kw) -> RunConfig:
    kw.setdefault("gate", GateSpec.z(math.pi / 4))
    kw.setdefault("angles", AngleState())
    return RunConfig(**kw)


def test_run_config_requires_exactly_one_state():
    with pytest.raises(ConfigError):
        RunConfig(gate=GateSpec.z(1.0))
    with pytest.raises(ConfigError):
        RunConfig(gate=GateSpec.z(1.0), angles=AngleState(), cartesian=(1.0, 0.0, 0.0))


def test_run_config_rejects_bad_sweeps_and_counts():
    with pytest.raises(ConfigError):
        _config(sweeps=(Sweep("theta", (1.0,)), Sweep("theta", (2.0,))))
    with pytest.raises(ConfigError):
        RunConfig(gate=GateSpec.z(1.0), cartesian=(1.0, 0.0, 0.0), sweeps=(Sweep("alpha", (1.0,)),))
    with pytest.raises(ConfigError):
        Sweep("gamma", (1.0,))
    with pytest.raises(ConfigError):
        _config(samples=0)
    with pytest.raises(ConfigError):
        _config(seed=2**64)
    with pytest.raises(ConfigError):
        _config(t_max=-1)


def test_sweep_points_first_sweep_outermost():
    config = _config(sweeps=(Sweep("k_dephase", (1.0, 3.0)), Sweep("theta", (0.5, 1.0, 1.5))))
    points = config.sweep_points()
    assert len(points) == 6
    assert points[0] == {"k_dephase": 1.0, "theta": 0.5}
    assert points[1] == {"k_dephase": 1.0, "theta": 1.0}
    assert points[3] == {"k_dephase": 3.0, "theta": 0.5}


def test_resolve_point_applies_overrides():
    config = _config(noise=NoiseParams(2.0, 5.0))
    gate, noise, b0 = resolve_point(config, {"theta": 1.0, "k_tilt": 7.0, "alpha": math.pi / 4})
    assert gate.theta == 1.0
    assert float(noise.k_dephase) == 2.0 and float(noise.k_tilt) == 7.0
    np.testing.assert_allclose(b0, [math.sqrt(0.5), 0.0, math.sqrt(0.5)], atol=1e-15)


def test_run_qfi_rows_are_ordered_sweep_then_t():
    config = _config(t_max=10, sweeps=(Sweep("k_dephase", (10.0, 0.5, 3.0)),))
    headers, rows = run_qfi(config, max_workers=3)
    assert headers[:3] == ["k_dephase", "t", "qfi"]
    assert len(rows) == 33
    assert [r["k_dephase"] for r in rows[::11]] == [10.0, 0.5, 3.0]
    assert [r["t"] for r in rows[:11]] == list(range(11))
    expected = qfi_curve(config.gate, NoiseParams.dephasing(0.5), (1.0, 0.0, 0.0), 10).qfi
    np.testing.assert_allclose([r["qfi"] for r in rows[11:22]], expected, rtol=0, atol=0)


def test_compute_sweep_is_deterministic_across_worker_counts():
    config = _config(t_max=20, noise=NoiseParams(2.0, 4.0), sweeps=(Sweep("theta", (0.3, 0.9, 1.7, 2.5)),))
    one = compute_sweep(config, max_workers=1)
    many = compute_sweep(config, max_workers=4)
    for (p1, s1), (p2, s2) in zip(one, many):
        assert p1 == p2
        np.testing.assert_array_equal(s1.qfi, s2.qfi)


def test_run_matrix_and_evolve():
    config = _config(gate=GateSpec.z(math.pi / 2), noise=NoiseParams(math.inf, 0.0), t_max=3)
    np.testing.assert_allclose(run_matrix(config), np.eye(3) / 3.0, atol=1e-15)
    headers, rows = run_evolve(config)
    assert headers[0] == "t" and len(rows) == 4
    assert rows[1]["bx"] == pytest.approx(1.0 / 3.0)


def test_run_optimal():
    config = _config(noise=NoiseParams.dephasing(3.0))
    report = run_optimal(config)
    assert report.t_int == 5
    assert report.t_real == pytest.approx(optimal_steps_dephasing(3.0)[0])
    assert report.qfi == pytest.approx(25.0 * bessel_ratio(3.0) ** 10, rel=1e-12)
    assert run_optimal(config, k_dephase=0.5).t_int == 1
    with pytest.raises(UnboundedOptimumError):
        run_optimal(_config())
    with pytest.raises(RegimeMismatchError, match="argmax"):
        run_optimal(_config(noise=NoiseParams(3.0, 7.0)))


def test_run_optimal_large_concentration():
    report = run_optimal(_config(noise=NoiseParams.dephasing(1e9)))
    assert report.t_int == pytest.approx(2e9, rel=1e-6)
    assert report.qfi == pytest.approx(report.t_int**2 * math.exp(-2.0), rel=1e-6)


@pytest.fixture
def quick() -> ValidationOptions:
    return ValidationOptions(samples=2_000, seed=11, scale=1.0)


def test_validation_checks_pass(quick):
    assert all(r.passed for r in check_special_functions(quick))
    assert check_integral_identities(quick).passed
    assert check_quadrature(quick).passed
    assert check_finite_differences(quick).passed
    assert check_rotation_invariance(quick, trials=20).passed
    assert all(r.passed for r in check_closed_forms(quick))
    assert all(r.passed for r in check_fisher_bound(quick, trials=200))


def test_monte_carlo_check_with_few_samples():
    assert check_monte_carlo(ValidationOptions(samples=100, seed=5)).passed


def test_zero_tolerance_scale_fails():
    results = run_validation(ValidationOptions(samples=100, scale=0.0), ["quadrature", "closed_forms"])
    assert not all(r.passed for r in results)
    assert any(r.name == "quadrature_vs_analytic" and not r.passed for r in results)


def test_run_validation_selects_suites(quick):
    results = run_validation(quick, ["special", "integrals"])
    assert {r.name for r in results} == {"bessel_recurrence", "bessel_vs_series", "tilt_integral_identities"}
    assert "monte_carlo" in SUITES and "rotation_invariance" in SUITES
    assert "PASS" in results[0].line()
