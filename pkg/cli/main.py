"""
Command-line entry point: python -m cli <command> [flags]

Commands:
- matrix    print the noisy rotation map
- evolve    write b_t and ∂θ b_t per step
- qfi       write QFI curves (optionally swept, or a figure preset)
- optimal   optimal number of gate applications under pure dephasing
- validate  run the oracle-vs-analytic suites

Exit codes: 0 success, 1 domain/config error, 2 I/O error, 3 validation failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

from config import DEFAULT_SAMPLES, DEFAULT_SEED, LOG_LEVEL, MATRIX_SIGNIFICANT_DIGITS, OUTPUT_ROOT
from domain.errors import ConfigError, DomainError, NumericalError
from domain.run_config import RunConfig
from runners import (
    FIGURE_NAMES,
    SUITES,
    ValidationOptions,
    figure_rows,
    run_evolve,
    run_matrix,
    run_optimal,
    run_qfi,
    run_validation,
)
from writers import FORMATS, write_rows

from .options import build_run_config, merged_settings, suite_names

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2
EXIT_VALIDATION = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; here those are config errors (1)."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _common_flags() -> argparse.ArgumentParser:
    p = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    g = p.add_argument_group("gate and noise")
    g.add_argument("--theta", help="rotation angle in radians; accepts expressions like pi/4 or 3*pi/8")
    g.add_argument("--axis", help="rotation axis x,y,z (normalised; default 0,0,1)")
    g.add_argument("--k-dephase", dest="k_dephase", help="dephasing concentration k_D (number or inf)")
    g.add_argument("--k-tilt", dest="k_tilt", help="tilting concentration k_T (number or inf)")
    s = p.add_argument_group("initial state (either --b0 or the angles)")
    s.add_argument("--b0", help="Cartesian Bloch vector x,y,z")
    s.add_argument("--alpha", help="polar angle (default pi/2)")
    s.add_argument("--gamma", help="azimuth (default 0)")
    s.add_argument("--radius", help="Bloch vector length in [0, 1] (default 1)")
    r = p.add_argument_group("run")
    r.add_argument("--steps", help="number of gate applications t_max")
    r.add_argument("--sweep", action="append", help="name=v1,v2,... over theta, k_dephase, k_tilt or alpha; repeatable")
    r.add_argument("--output", help="output file (stdout when omitted)")
    r.add_argument("--format", choices=FORMATS, help="output format (default csv)")
    r.add_argument("--seed", help="Monte Carlo seed (unsigned 64-bit)")
    r.add_argument("--samples", help="Monte Carlo sample count")
    r.add_argument("--config", help="flat key = value file mirroring these flags")
    v = p.add_argument_group("logging")
    v.add_argument("-v", "--verbose", action="store_true", default=False)
    v.add_argument("-q", "--quiet", action="store_true", default=False)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = _Parser(prog="python -m cli", description="QFI of repeated noisy qubit rotations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("matrix", parents=[common], help="print the noisy rotation map")
    sub.add_parser("evolve", parents=[common], help="write b_t and its theta-derivative per step")
    qfi = sub.add_parser(
        "qfi", parents=[common], argument_default=argparse.SUPPRESS, help="write QFI curves"
    )
    qfi.add_argument("--figure", choices=FIGURE_NAMES, help="emit a preset figure data set instead")
    sub.add_parser("optimal", parents=[common], help="optimal steps under pure dephasing")
    val = sub.add_parser(
        "validate", parents=[common], argument_default=argparse.SUPPRESS, help="run the validation suites"
    )
    val.add_argument("--tolerance", help="multiplier applied to every tolerance (default 1)")
    val.add_argument("--suite", action="append", choices=list(SUITES), help="run only these suites; repeatable")
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = LOG_LEVEL.upper()
    if getattr(args, "verbose", False):
        level = "DEBUG"
    elif getattr(args, "quiet", False):
        level = "ERROR"
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def render_matrix(matrix, digits: int = MATRIX_SIGNIFICANT_DIGITS) -> str:
    return "\n".join(" ".join(f"{v:>{digits + 8}.{digits}g}" for v in row) for row in matrix) + "\n"


def _default_output(config: RunConfig, command: str) -> Optional[Path]:
    if config.output is not None:
        return config.output
    if config.format == "xlsx":
        name = config.figure or command
        return OUTPUT_ROOT / f"{name}.xlsx"
    return None


def cmd_matrix(config: RunConfig, out: TextIO) -> int:
    matrix = run_matrix(config)
    if config.format == "json":
        text = json.dumps({"matrix": matrix.tolist()}, indent=2) + "\n"
    elif config.format == "csv":
        text = render_matrix(matrix)
    else:
        raise ConfigError("--format", "matrix supports csv (plain text) or json")
    if config.output is None:
        out.write(text)
    else:
        config.output.parent.mkdir(parents=True, exist_ok=True)
        config.output.write_text(text, encoding="utf-8")
        logger.info("✅ Matrix saved: %s", config.output)
    return EXIT_OK


def cmd_evolve(config: RunConfig, out: TextIO) -> int:
    if config.sweeps:
        raise ConfigError("--sweep", "evolve does not take sweeps; use the qfi command")
    headers, rows = run_evolve(config)
    write_rows(headers, rows, config.format, _default_output(config, "evolve"), sheet_name="evolve", stream=out)
    return EXIT_OK


def cmd_qfi(config: RunConfig, out: TextIO, figure_steps: Optional[int] = None) -> int:
    if config.figure:
        if config.sweeps:
            raise ConfigError("--figure", "figure presets fix their own parameters; drop --sweep")
        headers, rows = figure_rows(config.figure, figure_steps)
    else:
        headers, rows = run_qfi(config)
    write_rows(headers, rows, config.format, _default_output(config, "qfi"), sheet_name=config.figure or "qfi", stream=out)
    return EXIT_OK


def cmd_optimal(config: RunConfig, out: TextIO) -> int:
    if any(s.name != "k_dephase" for s in config.sweeps):
        raise ConfigError("--sweep", "optimal only sweeps k_dephase")
    values: List[Optional[float]] = [None]
    if config.sweeps:
        values = list(config.sweeps[0].values)
    for k in values:
        report = run_optimal(config, k_dephase=k)
        out.write(
            f"k_dephase = {report.k_dephase:.17g}\n"
            f"t_real = {report.t_real:.17g}\n"
            f"t_int = {report.t_int}\n"
            f"qfi(t_int) = {report.qfi:.17g}\n"
        )
    return EXIT_OK


def cmd_validate(config: RunConfig, out: TextIO, suites: Optional[Sequence[str]] = None) -> int:
    options = ValidationOptions(
        samples=config.samples if config.samples is not None else DEFAULT_SAMPLES,
        seed=config.seed if config.seed is not None else DEFAULT_SEED,
        scale=config.tolerance_scale,
    )
    results = run_validation(options, suites)
    for r in results:
        out.write(r.line() + "\n")
    failed = [r.name for r in results if not r.passed]
    if failed:
        out.write(f"FAILED: {', '.join(failed)}\n")
        return EXIT_VALIDATION
    out.write(f"OK: {len(results)} checks passed\n")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_DOMAIN
    _configure_logging(args)

    try:
        settings = merged_settings(args)
        needs_theta = args.command not in ("validate", "optimal") and not settings.get("figure")
        config = build_run_config(settings, require_theta=needs_theta)
        if args.command == "matrix":
            return cmd_matrix(config, out)
        if args.command == "evolve":
            return cmd_evolve(config, out)
        if args.command == "qfi":
            return cmd_qfi(config, out, config.t_max if "steps" in settings else None)
        if args.command == "optimal":
            return cmd_optimal(config, out)
        return cmd_validate(config, out, suite_names(settings))
    except DomainError as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION if args.command == "validate" else EXIT_DOMAIN
    except OSError as e:
        logger.error("I/O error: %s", e)
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO
