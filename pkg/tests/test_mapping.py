import math

import numpy as np
import pytest

from channels import general_noisy_rotation_z, general_noisy_rotation_z_derivative
from domain.noise import NoiseParams
from domain.schemas import EVOLVE_HEADERS, QFI_HEADERS
from domain.states import GateSpec
from mapping import qfi_headers, series_to_qfi_rows, trace_to_evolve_rows
from metrology import evolve, qfi_curve


def test_qfi_headers_put_sweeps_first():
    assert qfi_headers() == QFI_HEADERS
    assert qfi_headers(["k_dephase", "theta"]) == ["k_dephase", "theta"] + QFI_HEADERS
    with pytest.raises(ValueError):
        qfi_headers(["gamma"])


def test_series_to_qfi_rows():
    series = qfi_curve(GateSpec.z(math.pi / 4), NoiseParams.dephasing(3.0), (1.0, 0.0, 0.0), 5)
    rows = series_to_qfi_rows(series, {"k_dephase": 3.0})
    assert [r["t"] for r in rows] == list(range(6))
    assert all(r["k_dephase"] == 3.0 for r in rows)
    assert rows[0]["qfi"] == 0.0
    assert rows[3]["qfi"] == series.qfi[3]
    assert rows[2]["purity"] == pytest.approx(rows[2]["bx"] ** 2 + rows[2]["by"] ** 2 + rows[2]["bz"] ** 2)
    assert set(rows[0]) == {"k_dephase", *QFI_HEADERS}


def test_trace_to_evolve_rows():
    params = NoiseParams(2.0, 5.0)
    trace = evolve(
        general_noisy_rotation_z(1.0, params), general_noisy_rotation_z_derivative(1.0, params), (0.0, 0.6, 0.8), 4
    )
    rows = trace_to_evolve_rows(trace)
    assert len(rows) == 5
    assert list(rows[0]) == EVOLVE_HEADERS
    assert rows[4]["dbz"] == trace.derivative[4, 2]
    np.testing.assert_allclose([rows[1]["bx"], rows[1]["by"], rows[1]["bz"]], trace.bloch[1])
    assert rows[0]["purity"] == pytest.approx(1.0)
