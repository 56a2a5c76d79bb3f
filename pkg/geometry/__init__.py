"""Bloch-sphere geometry: state parametrisation, rotations and basis changes."""

from .rotations import (
    align_axis_to_z,
    axis_rotation,
    bloch_from_angles,
    conjugate,
    cross_matrix,
    is_orthogonal,
    is_rotation,
    operator_norm,
    rodrigues,
)

__all__ = [
    "bloch_from_angles",
    "axis_rotation",
    "align_axis_to_z",
    "conjugate",
    "cross_matrix",
    "rodrigues",
    "is_orthogonal",
    "is_rotation",
    "operator_norm",
]
