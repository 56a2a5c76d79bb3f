"""Shared fixtures. The repository root is put on sys.path so the flat packages import as in the CLI."""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def random_axes(rng: np.random.Generator) -> np.ndarray:
    """Twenty random unit vectors, plus the coordinate axes and their negatives."""
    v = rng.normal(size=(20, 3))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    coords = np.vstack((np.eye(3), -np.eye(3)))
    return np.vstack((coords, v))


@pytest.fixture
def out_dir(tmp_path: Path) -> Path:
    d = tmp_path / "out"
    d.mkdir()
    return d
