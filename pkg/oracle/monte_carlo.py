"""
Monte Carlo estimate of a noisy rotation: the sample mean of Rodrigues matrices
about sampled axes by sampled angles.

The sample index range is cut into MC_CHUNK_SIZE chunks; chunk i always draws
from child i of SeedSequence(seed), and chunk statistics are merged in index
order. The result is therefore the same for any number of worker threads.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from config import DEFAULT_SEED, MAX_WORKERS, MC_CHUNK_SIZE
from domain.errors import DomainError
from domain.noise import NoiseParams
from domain.records import McEstimate
from domain.states import GateSpec, VectorLike, check_angle
from geometry import align_axis_to_z, axis_rotation

from .sampling import uniform_angles, uniform_axes, vmf_axes, von_mises_angles

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _ChunkStats:
    count: int
    mean: NDArray[np.float64]
    m2: NDArray[np.float64]

    def merge(self, other: "_ChunkStats") -> "_ChunkStats":
        n = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * (other.count / n)
        m2 = self.m2 + other.m2 + delta * delta * (self.count * other.count / n)
        return _ChunkStats(n, mean, m2)


def _batched_rotations(axes: NDArray[np.float64], angles: NDArray[np.float64]) -> NDArray[np.float64]:
    """(n, 3, 3) Rodrigues matrices: cos ψ I + sin ψ [n]× + (1 − cos ψ) n nᵀ."""
    c = np.cos(angles)[:, None, None]
    s = np.sin(angles)[:, None, None]
    x, y, z = axes[:, 0], axes[:, 1], axes[:, 2]
    zeros = np.zeros_like(x)
    cross = np.stack(
        (
            np.stack((zeros, -z, y), axis=-1),
            np.stack((z, zeros, -x), axis=-1),
            np.stack((-y, x, zeros), axis=-1),
        ),
        axis=1,
    )
    outer = axes[:, :, None] * axes[:, None, :]
    return c * np.eye(3) + s * cross + (1.0 - c) * outer


def _draw_chunk(
    theta: float,
    params: NoiseParams,
    basis: NDArray[np.float64],
    size: int,
    seed_seq: np.random.SeedSequence,
) -> _ChunkStats:
    rng = np.random.default_rng(seed_seq)
    kd, kt = params.k_dephase, params.k_tilt

    if kd.noiseless:
        eps = np.zeros(size)
    elif kd.is_uniform:
        eps = uniform_angles(size, rng)
    else:
        eps = von_mises_angles(kd.value, size, rng)

    if kt.noiseless:
        axes = np.tile(np.array([0.0, 0.0, 1.0]), (size, 1))
    elif kt.is_uniform:
        axes = uniform_axes(size, rng)
    else:
        axes = vmf_axes(kt.value, size, rng)

    # Axes drawn around ẑ are carried onto the nominal axis: n = Bᵀ a.
    axes = axes @ basis
    mats = _batched_rotations(axes, theta + eps).reshape(size, 9)
    mean = mats.mean(axis=0)
    m2 = ((mats - mean) ** 2).sum(axis=0)
    return _ChunkStats(size, mean, m2)


def _chunk_sizes(samples: int) -> Tuple[int, ...]:
    full, rest = divmod(samples, MC_CHUNK_SIZE)
    return (MC_CHUNK_SIZE,) * full + ((rest,) if rest else ())


def mc_noisy_rotation(
    theta: float,
    params: NoiseParams,
    samples: int,
    seed: Optional[int] = None,
    axis: VectorLike = (0.0, 0.0, 1.0),
    max_workers: int = MAX_WORKERS,
) -> McEstimate:
    """Sample-mean estimate of the noisy rotation about `axis` with per-entry standard errors."""
    th = check_angle(theta)
    if isinstance(samples, bool) or int(samples) != samples or samples < 1:
        raise DomainError(f"samples must be a positive integer, got: {samples}")
    samples = int(samples)
    seed = DEFAULT_SEED if seed is None else int(seed)
    basis = align_axis_to_z(axis)

    if params.is_noiseless:
        exact = axis_rotation(GateSpec(tuple(basis.T @ np.array([0.0, 0.0, 1.0])), th))
        return McEstimate(mean_map=exact, stderr_map=np.zeros((3, 3)), samples=samples, seed=seed)

    sizes = _chunk_sizes(samples)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    workers = max(1, min(max_workers, len(sizes)))
    logger.debug("MC: %d samples in %d chunks on %d workers (seed=%d)", samples, len(sizes), workers, seed)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        stats = list(
            pool.map(
                lambda job: _draw_chunk(th, params, basis, job[0], job[1]),
                zip(sizes, children),
            )
        )

    total = stats[0]
    for chunk in stats[1:]:
        total = total.merge(chunk)

    if samples > 1:
        stderr = np.sqrt(total.m2 / (samples - 1)) / math.sqrt(samples)
    else:
        stderr = np.zeros(9)
    return McEstimate(
        mean_map=total.mean.reshape(3, 3),
        stderr_map=stderr.reshape(3, 3),
        samples=samples,
        seed=seed,
    )
