"""
Rotations of the Bloch ball.

- bloch_from_angles: polar/azimuthal parametrisation of an initial state
- axis_rotation: Rodrigues matrix for a GateSpec
- align_axis_to_z: canonical rotation taking a unit axis onto ẑ
- conjugate: change of basis Bᵀ·M·B for an orthogonal B
"""

from __future__ import annotations

import math

import numpy as np

from config import AXIS_NORM_TOL, ORTHOGONALITY_TOL
from domain.errors import DomainError
from domain.states import BlochVector, GateSpec, LinearMap3, VectorLike, as_vector3

_Z = np.array([0.0, 0.0, 1.0])


def cross_matrix(n: VectorLike) -> LinearMap3:
    """[n]×, so that cross_matrix(n) @ v == n × v."""
    x, y, z = as_vector3(n, "axis")
    return np.array(
        [
            [0.0, -z, y],
            [z, 0.0, -x],
            [-y, x, 0.0],
        ]
    )


def rodrigues(axis: VectorLike, theta: float) -> LinearMap3:
    """I + sinθ [n]× + (1 − cosθ) [n]×² for a unit axis; θ is not range-checked."""
    k = cross_matrix(axis)
    return np.eye(3) + math.sin(theta) * k + (1.0 - math.cos(theta)) * (k @ k)


def bloch_from_angles(radius: float, alpha: float, gamma: float) -> BlochVector:
    r = float(radius)
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"Bloch radius must lie in [0, 1], got: {radius}")
    a = float(alpha)
    if not 0.0 <= a <= math.pi:
        raise DomainError(f"Polar angle alpha must lie in [0, pi], got: {alpha}")
    g = float(gamma)
    sa = math.sin(a)
    return BlochVector(r * sa * math.cos(g), r * sa * math.sin(g), r * math.cos(a))


def axis_rotation(spec: GateSpec) -> LinearMap3:
    return rodrigues(spec.axis_array(), spec.theta)


def align_axis_to_z(axis: VectorLike) -> LinearMap3:
    """Rotation R with R·axis = ẑ.

    Uses the geodesic rotation about axis × ẑ. For axis = −ẑ that cross
    product vanishes and a half turn about x̂ is returned.
    """
    n = as_vector3(axis, "axis")
    norm = float(np.linalg.norm(n))
    if norm == 0.0:
        raise DomainError("Cannot align a zero vector with z")
    if abs(norm - 1.0) > AXIS_NORM_TOL:
        raise DomainError(f"Axis must be a unit vector, got norm {norm!r}")
    n = n / norm

    w = np.cross(n, _Z)
    s = float(np.linalg.norm(w))
    c = float(n @ _Z)
    if s == 0.0:
        if c > 0:
            return np.eye(3)
        return np.diag([1.0, -1.0, -1.0])
    return rodrigues(w / s, math.atan2(s, c))


def is_orthogonal(m: LinearMap3, tol: float = ORTHOGONALITY_TOL) -> bool:
    m = np.asarray(m, dtype=np.float64)
    return m.shape == (3, 3) and bool(np.max(np.abs(m.T @ m - np.eye(3))) <= tol)


def is_rotation(m: LinearMap3, tol: float = ORTHOGONALITY_TOL) -> bool:
    return is_orthogonal(m, tol) and abs(float(np.linalg.det(m)) - 1.0) <= tol


def operator_norm(m: LinearMap3) -> float:
    """Largest singular value."""
    return float(np.linalg.norm(np.asarray(m, dtype=np.float64), ord=2))


def conjugate(m: LinearMap3, basis_change: LinearMap3) -> LinearMap3:
    b = np.asarray(basis_change, dtype=np.float64)
    if not is_orthogonal(b):
        raise DomainError("Basis change must be an orthogonal 3x3 matrix")
    return b.T @ np.asarray(m, dtype=np.float64) @ b
