"""
Noise parameter types.

A concentration parameter k controls how sharply a von Mises (angle) or
von Mises-Fisher (axis) distribution peaks around its mean:
- k = 0 is the uniform law (angle or axis completely random),
- k → ∞ is the noiseless limit, represented by an explicit flag rather than
  a float so that noiseless limits are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from .errors import DomainError


@dataclass(frozen=True)
class Concentration:
    value: float = 0.0
    noiseless: bool = False

    def __post_init__(self) -> None:
        if self.noiseless:
            object.__setattr__(self, "value", math.inf)
            return
        v = float(self.value)
        if math.isnan(v) or v < 0:
            raise DomainError(f"Concentration must be >= 0, got: {self.value}")
        if math.isinf(v):
            # A bare float('inf') is promoted to the sentinel.
            object.__setattr__(self, "noiseless", True)
        object.__setattr__(self, "value", v)

    @classmethod
    def infinite(cls) -> "Concentration":
        """The noiseless sentinel."""
        return cls(noiseless=True)

    @property
    def is_uniform(self) -> bool:
        return not self.noiseless and self.value == 0.0

    @property
    def is_finite(self) -> bool:
        return not self.noiseless

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        return "inf" if self.noiseless else f"{self.value:g}"


ConcentrationLike = Union[Concentration, float, int]

NOISELESS = Concentration.infinite()


def as_concentration(k: ConcentrationLike) -> Concentration:
    """Coerce a plain number (math.inf allowed) into a Concentration."""
    if isinstance(k, Concentration):
        return k
    if isinstance(k, bool):
        raise DomainError(f"Concentration must be numeric, got: {k!r}")
    return Concentration(float(k))


@dataclass(frozen=True)
class NoiseParams:
    """Dephasing (rotation angle) and tilting (rotation axis) concentrations."""

    k_dephase: Concentration = field(default_factory=Concentration.infinite)
    k_tilt: Concentration = field(default_factory=Concentration.infinite)

    def __post_init__(self) -> None:
        object.__setattr__(self, "k_dephase", as_concentration(self.k_dephase))
        object.__setattr__(self, "k_tilt", as_concentration(self.k_tilt))

    @classmethod
    def noiseless(cls) -> "NoiseParams":
        return cls()

    @classmethod
    def dephasing(cls, k_dephase: ConcentrationLike) -> "NoiseParams":
        return cls(k_dephase=as_concentration(k_dephase))

    @classmethod
    def tilting(cls, k_tilt: ConcentrationLike) -> "NoiseParams":
        return cls(k_tilt=as_concentration(k_tilt))

    @property
    def is_noiseless(self) -> bool:
        return self.k_dephase.noiseless and self.k_tilt.noiseless

    @property
    def is_pure_dephasing(self) -> bool:
        return self.k_tilt.noiseless and self.k_dephase.is_finite

    def replace(self, **changes: ConcentrationLike) -> "NoiseParams":
        data = {"k_dephase": self.k_dephase, "k_tilt": self.k_tilt}
        data.update({k: as_concentration(v) for k, v in changes.items()})
        return NoiseParams(**data)
