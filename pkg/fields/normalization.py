"""
Field normalization utilities for command-line and config-file values.
"""

from __future__ import annotations

import math
import re
from typing import Any, Optional, Tuple

from domain.errors import ConfigError
from domain.noise import Concentration, as_concentration
from domain.run_config import SWEEPABLE, Sweep

_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_TOKEN = re.compile(rf"\s*({_NUMBER}|pi|π|\*|/)", re.IGNORECASE)
_INF_SPELLINGS = {"inf", "+inf", "infinity", "∞", "noiseless"}

# Sweep parameters are spelled like the flags on the command line.
_SWEEP_ALIASES = {
    "theta": "theta",
    "alpha": "alpha",
    "k_dephase": "k_dephase",
    "k-dephase": "k_dephase",
    "kd": "k_dephase",
    "k_tilt": "k_tilt",
    "k-tilt": "k_tilt",
    "kt": "k_tilt",
}


def _tokens(expr: str) -> list[str]:
    s = expr.strip()
    out: list[str] = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ValueError(f"unexpected character {s[pos:].strip()[:1]!r}")
        out.append(m.group(1).lower())
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return out


def parse_angle(value: Any, field: str = "--theta") -> float:
    """Evaluate an angle written in radians with the grammar number | pi, joined by * and /.

    Examples:
    - '0.5'      → 0.5
    - 'pi/4'     → 0.7853981633974483
    - '3*pi/8'   → 1.1780972450961724
    - '2pi/3'    → ConfigError (operators are required)
    """
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    s = str(value or "").strip()
    if not s:
        raise ConfigError(field, "empty angle expression")
    try:
        toks = _tokens(s)
        if len(toks) % 2 == 0:
            raise ValueError("expression must alternate operands and operators")

        def operand(tok: str) -> float:
            if tok in ("pi", "π"):
                return math.pi
            if tok in ("*", "/"):
                raise ValueError(f"operator {tok!r} where a number or pi was expected")
            return float(tok)

        result = operand(toks[0])
        for op, tok in zip(toks[1::2], toks[2::2]):
            if op not in ("*", "/"):
                raise ValueError(f"expected * or / but found {op!r}")
            rhs = operand(tok)
            result = result * rhs if op == "*" else result / rhs
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(field, f"cannot parse angle {s!r}: {e}") from e
    return result


def parse_concentration(value: Any, field: str = "--k-dephase") -> Concentration:
    """
    Examples:
    - 'inf' / '∞'  → noiseless sentinel
    - '3'          → Concentration(3.0)
    - '-1'         → ConfigError
    """
    if isinstance(value, Concentration):
        return value
    s = str(value).strip().lower()
    try:
        if s in _INF_SPELLINGS:
            return Concentration.infinite()
        return as_concentration(float(s))
    except ValueError as e:
        raise ConfigError(field, f"expected a non-negative number or 'inf', got {value!r}") from e


def parse_triple(value: Any, field: str = "--axis") -> Tuple[float, float, float]:
    """'1,0,0' → (1.0, 0.0, 0.0); also accepts whitespace or ';' separators."""
    if isinstance(value, (tuple, list)):
        parts = list(value)
    else:
        parts = [p for p in re.split(r"[,\s;]+", str(value).strip().strip("()[]")) if p]
    if len(parts) != 3:
        raise ConfigError(field, f"expected three components x,y,z, got {value!r}")
    try:
        x, y, z = (float(p) for p in parts)
    except ValueError as e:
        raise ConfigError(field, f"components must be numbers, got {value!r}") from e
    if not all(math.isfinite(c) for c in (x, y, z)):
        raise ConfigError(field, f"components must be finite, got {value!r}")
    return x, y, z


def parse_int(value: Any, field: str, minimum: Optional[int] = None) -> int:
    """'1_000_000' → 1000000."""
    if isinstance(value, bool):
        raise ConfigError(field, f"expected an integer, got {value!r}")
    if isinstance(value, int):
        out = value
    else:
        s = str(value).strip().replace("_", "")
        try:
            out = int(s)
        except ValueError as e:
            raise ConfigError(field, f"expected an integer, got {value!r}") from e
    if minimum is not None and out < minimum:
        raise ConfigError(field, f"must be >= {minimum}, got {out}")
    return out


def parse_sweep(value: str) -> Sweep:
    """
    Examples:
    - 'k_dephase=0.5,1,3,10'     → Sweep('k_dephase', (0.5, 1.0, 3.0, 10.0))
    - 'theta=pi/8,pi/4,pi/2'     → Sweep('theta', (0.392..., 0.785..., 1.570...))
    - 'k-tilt=1,inf'             → Sweep('k_tilt', (1.0, inf))
    """
    name, sep, rest = str(value).partition("=")
    if not sep:
        raise ConfigError("--sweep", f"expected name=v1,v2,..., got {value!r}")
    key = name.strip().lower()
    canonical = _SWEEP_ALIASES.get(key)
    if canonical is None:
        raise ConfigError("--sweep", f"unknown parameter {name.strip()!r}; choose from {', '.join(SWEEPABLE)}")
    raw = [v for v in (p.strip() for p in rest.split(",")) if v]
    if canonical in ("theta", "alpha"):
        values = tuple(parse_angle(v, field=f"--sweep {canonical}") for v in raw)
    else:
        values = tuple(parse_concentration(v, field=f"--sweep {canonical}").value for v in raw)
    return Sweep(canonical, values)
