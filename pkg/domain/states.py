"""
Qubit state and gate value types.

- BlochVector: real 3-vector inside the Bloch ball (norm ≤ 1).
- GateSpec: nominal rotation axis (unit 3-vector) and angle θ ∈ (0, 2π).
- LinearMap3: a (3, 3) float64 ndarray; rotations and their noise averages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np
from numpy.typing import NDArray

from config import AXIS_NORM_TOL, BLOCH_NORM_TOL

from .errors import DomainError, InvalidAngleError

LinearMap3 = NDArray[np.float64]
Vector3 = NDArray[np.float64]
VectorLike = Union[Sequence[float], NDArray[np.float64]]

TWO_PI = 2.0 * math.pi


def as_vector3(v: VectorLike, name: str = "vector") -> Vector3:
    """Return `v` as a float64 array of shape (3,), or raise DomainError."""
    arr = np.asarray(v, dtype=np.float64)
    if arr.shape != (3,):
        raise DomainError(f"{name} must have 3 components, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite, got {arr.tolist()}")
    return arr


def check_angle(theta: float) -> float:
    """Validate a nominal rotation angle and return it as float.

    Both ends of (0, 2π) are rejected: the QFI is discontinuous at θ = 0.
    """
    th = float(theta)
    if math.isnan(th):
        raise InvalidAngleError("Rotation angle is NaN")
    if th == 0.0 or th == TWO_PI:
        raise InvalidAngleError(
            f"Rotation angle {th} sits on the QFI discontinuity; "
            "the Cramér-Rao bound does not hold there. Use 0 < theta < 2*pi."
        )
    if not 0.0 < th < TWO_PI:
        raise InvalidAngleError(f"Rotation angle must lie in (0, 2*pi), got: {th}")
    return th


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        vals = (float(self.x), float(self.y), float(self.z))
        if not all(math.isfinite(v) for v in vals):
            raise DomainError(f"Bloch vector must be finite, got {vals}")
        norm = math.sqrt(sum(v * v for v in vals))
        if norm > 1.0 + BLOCH_NORM_TOL:
            raise DomainError(f"Bloch vector norm {norm!r} exceeds 1 (outside the Bloch ball)")
        if norm > 1.0:
            # Floating-point drift just above the sphere is pulled back onto it.
            vals = tuple(v / norm for v in vals)
        object.__setattr__(self, "x", vals[0])
        object.__setattr__(self, "y", vals[1])
        object.__setattr__(self, "z", vals[2])

    @classmethod
    def from_array(cls, v: VectorLike) -> "BlochVector":
        arr = as_vector3(v, "Bloch vector")
        return cls(float(arr[0]), float(arr[1]), float(arr[2]))

    def as_array(self) -> Vector3:
        return np.array([self.x, self.y, self.z], dtype=np.float64)

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.x, self.y, self.z)

    @property
    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    @property
    def purity(self) -> float:
        """|b|², reported in [0, 1]."""
        return min(1.0, self.x * self.x + self.y * self.y + self.z * self.z)


@dataclass(frozen=True)
class GateSpec:
    axis: Tuple[float, float, float]
    theta: float

    def __post_init__(self) -> None:
        arr = as_vector3(self.axis, "Rotation axis")
        norm = float(np.linalg.norm(arr))
        if abs(norm - 1.0) > AXIS_NORM_TOL:
            raise DomainError(f"Rotation axis must be a unit vector, got norm {norm!r}")
        object.__setattr__(self, "axis", (float(arr[0]), float(arr[1]), float(arr[2])))
        object.__setattr__(self, "theta", check_angle(self.theta))

    @classmethod
    def about(cls, axis: VectorLike, theta: float) -> "GateSpec":
        """Build a gate spec, normalising `axis` first (zero vectors are rejected)."""
        arr = as_vector3(axis, "Rotation axis")
        norm = float(np.linalg.norm(arr))
        if norm == 0.0:
            raise DomainError("Rotation axis must be nonzero")
        return cls(tuple(arr / norm), theta)

    @classmethod
    def z(cls, theta: float) -> "GateSpec":
        return cls((0.0, 0.0, 1.0), theta)

    def axis_array(self) -> Vector3:
        return np.array(self.axis, dtype=np.float64)

    def with_theta(self, theta: float) -> "GateSpec":
        return GateSpec(self.axis, theta)
