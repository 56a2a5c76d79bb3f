"""
RunConfig: everything one CLI invocation needs, after flags and config file are merged.

Exactly one initial-state representation is held: either polar angles
(radius, alpha, gamma) or a Cartesian triple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Literal, Optional, Tuple

import numpy as np

from .errors import ConfigError
from .noise import NoiseParams
from .states import GateSpec, Vector3

SWEEPABLE = ("theta", "k_dephase", "k_tilt", "alpha")

OutputFormat = Literal["csv", "json", "xlsx"]


@dataclass(frozen=True)
class AngleState:
    radius: float = 1.0
    alpha: float = math.pi / 2
    gamma: float = 0.0


@dataclass(frozen=True)
class Sweep:
    name: str
    values: Tuple[float, ...]

    def __post_init__(self) -> None:
        if self.name not in SWEEPABLE:
            raise ConfigError("--sweep", f"unknown parameter {self.name!r}; choose from {', '.join(SWEEPABLE)}")
        if not self.values:
            raise ConfigError("--sweep", f"no values given for {self.name!r}")


@dataclass(frozen=True)
class RunConfig:
    gate: GateSpec
    noise: NoiseParams = field(default_factory=NoiseParams)
    angles: Optional[AngleState] = None
    cartesian: Optional[Tuple[float, float, float]] = None
    t_max: int = 50
    sweeps: Tuple[Sweep, ...] = ()
    output: Optional[Path] = None
    format: OutputFormat = "csv"
    seed: Optional[int] = None
    samples: Optional[int] = None
    figure: Optional[str] = None
    tolerance_scale: float = 1.0

    def __post_init__(self) -> None:
        if (self.angles is None) == (self.cartesian is None):
            raise ConfigError("initial state", "give exactly one of --b0 or --alpha/--gamma/--radius")
        if self.t_max < 0:
            raise ConfigError("--steps", f"must be >= 0, got {self.t_max}")
        if self.samples is not None and self.samples < 1:
            raise ConfigError("--samples", f"must be >= 1, got {self.samples}")
        if self.seed is not None and not 0 <= self.seed < 2**64:
            raise ConfigError("--seed", f"must fit in an unsigned 64-bit integer, got {self.seed}")
        if self.tolerance_scale < 0:
            raise ConfigError("--tolerance", f"must be >= 0, got {self.tolerance_scale}")
        names = [s.name for s in self.sweeps]
        if len(set(names)) != len(names):
            raise ConfigError("--sweep", f"parameter swept twice: {names}")
        if "alpha" in names and self.cartesian is not None:
            raise ConfigError("--sweep", "alpha can only be swept when the initial state is given by angles")

    def initial_vector(self, alpha: Optional[float] = None) -> Vector3:
        # Local import: geometry depends on domain, not the other way round.
        from geometry import bloch_from_angles

        if self.cartesian is not None:
            return np.asarray(self.cartesian, dtype=np.float64)
        a = self.angles
        return bloch_from_angles(a.radius, a.alpha if alpha is None else alpha, a.gamma).as_array()

    def sweep_points(self) -> List[dict]:
        """Cartesian product of sweeps, first sweep outermost."""
        points: List[dict] = [{}]
        for sweep in self.sweeps:
            points = [{**p, sweep.name: v} for p in points for v in sweep.values]
        return points
