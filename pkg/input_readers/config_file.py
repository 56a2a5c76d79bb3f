"""
CONFIG FILE READER
------------------
Flat key-value text files mirroring the command-line flags:

    # dephasing sweep for the first figure
    theta = pi/4
    k-dephase = 3
    sweep = k_dephase=0.5,1,3,10
    steps = 60

Keys may be written with or without leading dashes; '-' and '_' are interchangeable.
A key may repeat (e.g. several sweeps); the values are kept in order.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import Dict, List

from domain.errors import ConfigError

logger = logging.getLogger(__name__)

# key, then '=' or whitespace (or both), then the value
_LINE = re.compile(r"^([^\s=]+)\s*(?:=\s*|\s+)(.+)$")


def normalize_key(key: str) -> str:
    return key.strip().lstrip("-").replace("-", "_").lower()


def read_config_file(path: Path) -> Dict[str, List[str]]:
    """Return {normalized key: [values in file order]}. OSError propagates to the caller."""
    path = Path(path).expanduser()
    text = path.read_text(encoding="utf-8")

    entries: Dict[str, List[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise ConfigError(f"{path.name}:{lineno}", f"expected 'key = value', got {raw.strip()!r}")
        key, value = normalize_key(m.group(1)), m.group(2).strip()
        entries.setdefault(key, []).append(value)

    logger.debug("✓ Read %d keys from %s", len(entries), path.name)
    return entries
