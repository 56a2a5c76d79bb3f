"""Classical Fisher information of a two-outcome projective measurement."""

from __future__ import annotations

import numpy as np

from config import AXIS_NORM_TOL
from domain.errors import DomainError, UndefinedFisherInformationError
from domain.states import VectorLike, as_vector3

from .evolution import InitialState, initial_array


def classical_fi_projective(meas_axis: VectorLike, b: InitialState, db: VectorLike) -> float:
    """(m·db)² / (1 − (m·b)²) for outcome probabilities p± = (1 ± m·b)/2."""
    m = as_vector3(meas_axis, "measurement axis")
    if abs(float(np.linalg.norm(m)) - 1.0) > AXIS_NORM_TOL:
        raise DomainError(f"Measurement axis must be a unit vector, got norm {np.linalg.norm(m)!r}")
    p = float(m @ initial_array(b))
    dp = float(m @ as_vector3(db, "db"))
    denom = 1.0 - p * p
    if denom <= 0.0:
        if dp == 0.0:
            return 0.0
        raise UndefinedFisherInformationError(
            f"Outcome is deterministic (m·b = {p!r}) but its probability moves with theta (m·db = {dp!r})"
        )
    return dp * dp / denom
