"""
Result records produced by the metrology and oracle packages.

EvolutionTrace and QfiSeries store their per-step data as stacked arrays
(row t = step t); `steps` / `entries` give the per-step view.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from .noise import NoiseParams
from .states import GateSpec, LinearMap3


@dataclass(frozen=True)
class EvolutionTrace:
    bloch: NDArray[np.float64]
    derivative: NDArray[np.float64]

    def __post_init__(self) -> None:
        if self.bloch.shape != self.derivative.shape or self.bloch.ndim != 2 or self.bloch.shape[1] != 3:
            raise ValueError(
                f"bloch/derivative must both have shape (T+1, 3), got {self.bloch.shape} and {self.derivative.shape}"
            )

    @property
    def t_max(self) -> int:
        return self.bloch.shape[0] - 1

    def __len__(self) -> int:
        return self.bloch.shape[0]

    @property
    def steps(self) -> Iterator[Tuple[int, NDArray[np.float64], NDArray[np.float64]]]:
        for t in range(len(self)):
            yield t, self.bloch[t], self.derivative[t]

    def norms(self) -> NDArray[np.float64]:
        return np.linalg.norm(self.bloch, axis=1)


@dataclass(frozen=True)
class QfiSeries:
    qfi: NDArray[np.float64]
    bloch: NDArray[np.float64]
    gate: GateSpec
    noise: NoiseParams
    initial: NDArray[np.float64]
    label: Optional[str] = None

    @property
    def t(self) -> NDArray[np.int64]:
        return np.arange(self.qfi.shape[0], dtype=np.int64)

    @property
    def entries(self) -> List[Tuple[int, float]]:
        return [(int(t), float(q)) for t, q in zip(self.t, self.qfi)]

    @property
    def purity(self) -> NDArray[np.float64]:
        return np.minimum(1.0, np.einsum("ij,ij->i", self.bloch, self.bloch))

    def argmax(self) -> int:
        """Step with the largest QFI (first one on ties)."""
        return int(np.argmax(self.qfi))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "t": self.t,
                "qfi": self.qfi,
                "bx": self.bloch[:, 0],
                "by": self.bloch[:, 1],
                "bz": self.bloch[:, 2],
                "purity": self.purity,
            }
        )


@dataclass(frozen=True)
class McEstimate:
    mean_map: LinearMap3
    stderr_map: NDArray[np.float64]
    samples: int
    seed: int

    def deviation_sigmas(self, reference: LinearMap3, floor: float = 1e-12) -> NDArray[np.float64]:
        """Entrywise |mean - reference| in units of standard error (floored)."""
        return np.abs(self.mean_map - reference) / np.maximum(self.stderr_map, floor)

    def agrees_with(self, reference: LinearMap3, n_sigma: float, floor: float = 1e-12) -> bool:
        tol = n_sigma * self.stderr_map + floor
        return bool(np.all(np.abs(self.mean_map - reference) <= tol))


@dataclass(frozen=True)
class DecompositionReport:
    """Perpendicular/parallel split of an initial state about the gate axis."""

    complete: QfiSeries
    dephased: QfiSeries
    perpendicular: QfiSeries
    parallel: QfiSeries
    total: NDArray[np.float64] = field(repr=False)

    @property
    def max_abs_deviation(self) -> float:
        return float(np.max(np.abs(self.total - self.complete.qfi)))

    @property
    def max_rel_deviation(self) -> float:
        ref = np.maximum(np.abs(self.complete.qfi), np.finfo(float).tiny)
        mask = self.complete.qfi > 0
        if not np.any(mask):
            return 0.0
        return float(np.max(np.abs(self.total - self.complete.qfi)[mask] / ref[mask]))
