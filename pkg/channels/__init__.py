"""Analytic noisy-rotation maps for dephasing, tilting and combined noise."""

from special import tilt_coefficients

from .noisy_rotations import (
    dephased_rotation_z,
    general_noisy_rotation_z,
    general_noisy_rotation_z_derivative,
    noisy_rotation,
    noisy_rotation_derivative,
    tilted_rotation_z,
    uniform_tilting,
)

__all__ = [
    "dephased_rotation_z",
    "tilted_rotation_z",
    "general_noisy_rotation_z",
    "general_noisy_rotation_z_derivative",
    "uniform_tilting",
    "noisy_rotation",
    "noisy_rotation_derivative",
    "tilt_coefficients",
]
