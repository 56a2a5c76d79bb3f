"""Bloch-vector evolution, quantum/classical Fisher information and optimal step counts."""

from .evolution import dephasing_trajectory, evolve, initial_array, map_derivative_z
from .fisher import classical_fi_projective
from .qfi import (
    QfiRegime,
    closed_form_qfi,
    decomposition_curves,
    dephasing_qfi,
    optimal_steps_dephasing,
    qfi_curve,
    qfi_from_bloch,
)

__all__ = [
    "evolve",
    "map_derivative_z",
    "dephasing_trajectory",
    "initial_array",
    "qfi_from_bloch",
    "qfi_curve",
    "closed_form_qfi",
    "QfiRegime",
    "optimal_steps_dephasing",
    "dephasing_qfi",
    "classical_fi_projective",
    "decomposition_curves",
]
