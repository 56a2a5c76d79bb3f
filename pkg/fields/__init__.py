"""Parsing and normalization of user-supplied field values."""

from .normalization import (
    parse_angle,
    parse_concentration,
    parse_int,
    parse_sweep,
    parse_triple,
)

__all__ = [
    "parse_angle",
    "parse_concentration",
    "parse_triple",
    "parse_int",
    "parse_sweep",
]
