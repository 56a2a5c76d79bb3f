"""
Flag/config-file merging into a RunConfig.

Precedence: built-in defaults < NOISYQFI_* environment < --config file < flags.
"""

from __future__ import annotations

import argparse
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional

from config import BLOCH_NORM_TOL, DEFAULT_STEPS
from domain.errors import ConfigError, DomainError, InvalidAngleError
from domain.noise import NoiseParams
from domain.run_config import AngleState, RunConfig
from domain.states import GateSpec
from fields import parse_angle, parse_concentration, parse_int, parse_sweep, parse_triple
from input_readers import read_config_file
from writers import FORMATS

logger = logging.getLogger(__name__)

# Keys accepted both as flags (dest names) and as config-file keys.
SCALAR_KEYS = (
    "theta",
    "axis",
    "k_dephase",
    "k_tilt",
    "b0",
    "alpha",
    "gamma",
    "radius",
    "steps",
    "output",
    "format",
    "seed",
    "samples",
    "figure",
    "tolerance",
)
LIST_KEYS = ("sweep", "suite")


def merged_settings(args: argparse.Namespace) -> Dict[str, Any]:
    """Raw string/list values from the config file, overridden by the flags that were given."""
    merged: Dict[str, Any] = {}
    config_path = getattr(args, "config", None)
    if config_path is not None:
        entries = read_config_file(Path(config_path))
        unknown = sorted(set(entries) - set(SCALAR_KEYS) - set(LIST_KEYS))
        if unknown:
            raise ConfigError(str(config_path), f"unknown keys: {', '.join(unknown)}")
        for key, values in entries.items():
            merged[key] = list(values) if key in LIST_KEYS else values[-1]
        logger.info("✓ Loaded config file: %s", config_path)

    for key in SCALAR_KEYS + LIST_KEYS:
        if hasattr(args, key):
            merged[key] = getattr(args, key)
    return merged


def _float(value: Any, field: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError) as e:
        raise ConfigError(field, f"expected a number, got {value!r}") from e


def build_run_config(settings: Dict[str, Any], require_theta: bool = True) -> RunConfig:
    theta_raw = settings.get("theta")
    if theta_raw is None:
        if require_theta:
            raise ConfigError("--theta", "a rotation angle is required (e.g. --theta pi/4)")
        theta_raw = math.pi / 4
    theta = parse_angle(theta_raw, "--theta")
    axis = parse_triple(settings.get("axis", "0,0,1"), "--axis")
    try:
        gate = GateSpec.about(axis, theta)
    except InvalidAngleError as e:
        raise ConfigError("--theta", str(e)) from e
    except DomainError as e:
        raise ConfigError("--axis", str(e)) from e

    noise = NoiseParams(
        parse_concentration(settings.get("k_dephase", "inf"), "--k-dephase"),
        parse_concentration(settings.get("k_tilt", "inf"), "--k-tilt"),
    )

    angle_keys = [k for k in ("alpha", "gamma", "radius") if k in settings]
    if "b0" in settings and angle_keys:
        raise ConfigError("--b0", f"give either --b0 or --{'/--'.join(angle_keys)}, not both")
    cartesian = None
    angles: Optional[AngleState] = None
    if "b0" in settings:
        cartesian = parse_triple(settings["b0"], "--b0")
        norm = math.sqrt(sum(c * c for c in cartesian))
        if norm > 1.0 + BLOCH_NORM_TOL:
            raise ConfigError("--b0", f"Bloch vector norm {norm:.17g} exceeds 1")
    else:
        angles = AngleState(
            radius=_float(settings.get("radius", 1.0), "--radius"),
            alpha=parse_angle(settings.get("alpha", "pi/2"), "--alpha"),
            gamma=parse_angle(settings.get("gamma", "0"), "--gamma"),
        )
        if not 0.0 <= angles.radius <= 1.0:
            raise ConfigError("--radius", f"must lie in [0, 1], got {angles.radius}")
        if not 0.0 <= angles.alpha <= math.pi:
            raise ConfigError("--alpha", f"must lie in [0, pi], got {angles.alpha}")

    fmt = str(settings.get("format", "csv")).lower()
    if fmt not in FORMATS:
        raise ConfigError("--format", f"expected one of {', '.join(FORMATS)}, got {fmt!r}")

    sweeps = tuple(parse_sweep(s) for s in settings.get("sweep") or [])
    seed = settings.get("seed")
    samples = settings.get("samples")
    output = settings.get("output")
    return RunConfig(
        gate=gate,
        noise=noise,
        angles=angles,
        cartesian=cartesian,
        t_max=parse_int(settings.get("steps", DEFAULT_STEPS), "--steps", minimum=0),
        sweeps=sweeps,
        output=Path(output) if output else None,
        format=fmt,
        seed=None if seed is None else parse_int(seed, "--seed", minimum=0),
        samples=None if samples is None else parse_int(samples, "--samples", minimum=1),
        figure=settings.get("figure"),
        tolerance_scale=_float(settings.get("tolerance", 1.0), "--tolerance"),
    )


def suite_names(settings: Dict[str, Any]) -> Optional[List[str]]:
    suites = settings.get("suite")
    return list(suites) if suites else None
