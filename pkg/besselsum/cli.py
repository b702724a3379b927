#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
CLI entry point and argument parser for besselsum.
"""

from __future__ import annotations
import argparse
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Dict, List, Optional

from besselsum.commands import (
    cmd_code_cwe,
    cmd_code_macwilliams,
    cmd_continuum_limit,
    cmd_eta_check,
    cmd_eta_probe,
    cmd_heat_kernel,
    cmd_heat_solve,
    cmd_one_dimensional,
    cmd_suite,
    cmd_theta_check,
    cmd_theta_identity,
    cmd_verify_identity,
)
from besselsum.config import config_digest, load_config, resolve_threads
from besselsum.constants import EXIT_BAD_INPUT, EXIT_FAILED, EXIT_OK, VERSION
from besselsum.core.errors import SpecParseError
from besselsum.core.reports import RunReport
from besselsum.logging_setup import logger, setup_logging
from besselsum.output import emit_csv, emit_json, render_summary

COMMANDS: Dict[str, Callable[[argparse.Namespace], list]] = {
    "verify-identity": cmd_verify_identity,
    "theta-check": cmd_theta_check,
    "eta-check": cmd_eta_check,
    "continuum-limit": cmd_continuum_limit,
    "theta-identity": cmd_theta_identity,
    "one-dimensional": cmd_one_dimensional,
    "code-cwe": cmd_code_cwe,
    "code-macwilliams": cmd_code_macwilliams,
    "heat-kernel": cmd_heat_kernel,
    "heat-solve": cmd_heat_solve,
    "eta-probe": cmd_eta_probe,
    "suite": cmd_suite,
}


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so run() owns the exit code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise SpecParseError(message, field="argv")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json", help="Report format on stdout.")
    common.add_argument("--no-meta", action="store_true", help="Omit timestamps and timings (byte-stable output).")
    common.add_argument("--threads", type=int, default=None,
                        help="Worker threads for lattice sums (falls back to BESSELSUM_THREADS).")
    common.add_argument("--tol", type=float, default=None, help="Absolute tolerance for the verdicts.")
    common.add_argument("--summary", action="store_true", help="Print a verdict table on stderr.")
    common.add_argument("-v", "--verbose", action="store_true", help="Enable verbose logging (DEBUG level).")
    common.add_argument("--log-file", type=str, metavar="PATH", help="Write logs to specified file.")
    common.add_argument("--config", dest="config_path", metavar="PATH", default=None,
                        help="Config file (default ~/.config/besselsum/config.toml).")

    ap = _Parser(
        prog="besselsum",
        description="Character-twisted I-Bessel lattice sums, theta/eta transformations, code "
                    "weight enumerators and lattice heat kernels, each identity checked by two routes.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    ap.add_argument("-V", "--version", action="version", version=f"besselsum {VERSION}")
    sp = ap.add_subparsers(dest="cmd", parser_class=_Parser)

    def add_identity_flags(p: argparse.ArgumentParser, default_t: str) -> None:
        p.add_argument("--lattice", required=True, help='Basis rows, e.g. "2,1;0,3" or "12".')
        p.add_argument("--q", type=int, default=1, help="Common character modulus (divides every basis entry).")
        p.add_argument("--chi", default=None,
                       help='Character(s): "kronecker:12", "principal:5", "table:4:0,1,0,-1"; ";" per coordinate.')
        p.add_argument("--x", default="0", help="Integer shift vector (one value is repeated).")
        p.add_argument("--y", default="0", help="Rational phase vector, e.g. 1/3,0.")
        p.add_argument("--t", default=default_t, help="Time per coordinate, real or complex (1+0.5i).")

    # Lattice sums and theta
    p = sp.add_parser("verify-identity", parents=[common], help="Twisted Bessel-lattice identity.")
    add_identity_flags(p, "2.0")
    p.add_argument("--allow-imprimitive", action="store_true",
                   help="Run with imprimitive characters; the verdict then carries no guarantee.")

    p = sp.add_parser("theta-check", parents=[common], help="Character theta transformation.")
    add_identity_flags(p, "0.5")

    p = sp.add_parser("continuum-limit", parents=[common], help="L-rescaled identity approaching the theta limit.")
    add_identity_flags(p, "0.5")
    p.add_argument("--L", default="8,16,32,64", help="Increasing scale factors.")

    p = sp.add_parser("theta-identity", parents=[common], help="Jacobi theta identity.")
    p.add_argument("--t", default="0.1,0.25,1,5", help="Comma-separated t values.")
    p.add_argument("--L", default=None, help="Also check the finite Bessel precursor at these L.")

    p = sp.add_parser("one-dimensional", parents=[common], help="Bessel sums over mZ and discrete tori.")
    p.add_argument("--m", default="1,2,3,4,5,6,7,8", help="Moduli m.")
    p.add_argument("--t", default="0.5,2.0,1+1i", help="Comma-separated t values.")
    p.add_argument("--torus", default=None, help='Torus side lengths, e.g. "4;2,3;3,3,3".')

    # Eta
    p = sp.add_parser("eta-check", parents=[common], help="Dedekind eta routes and transformations.")
    p.add_argument("--tau", default="1i,0.3+1.7i,0.5+2i", help="Comma-separated tau values (Im tau > 0).")

    p = sp.add_parser("eta-probe", parents=[common], help="Eta as the limit of a heat probe.")
    p.add_argument("--L", default="5,25", help="Values of L coprime to 12.")
    p.add_argument("--t", default="0.2", help="Time parameter t > 0.")

    # Codes
    def add_code_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--code", default=None, help='Code spec, e.g. "m=2,n=3,gen=111".')
        p.add_argument("--m", type=int, default=None, help="Alphabet size m.")
        p.add_argument("--n", type=int, default=None, help="Code length n.")
        p.add_argument("--generators", default=None, help='Semicolon-separated vectors, e.g. "111;011".')
        p.add_argument("--parity-check", default=None, help="Semicolon-separated parity-check rows.")
        p.add_argument("--x", default=None, help="Coset shift vector (default 0).")

    p = sp.add_parser("code-cwe", parents=[common], help="Coset weight enumerator as a Bessel sum.")
    add_code_flags(p)
    p.add_argument("--t", default="0.7", help="Time (one value, or one per coordinate).")

    p = sp.add_parser("code-macwilliams", parents=[common], help="MacWilliams identities for Bessel sums.")
    add_code_flags(p)
    p.add_argument("--t", default="0.7", help="Time.")

    # Heat
    p = sp.add_parser("heat-kernel", parents=[common], help="Explicit heat kernel values.")
    p.add_argument("--lattice", required=True, help="Basis rows.")
    p.add_argument("--t", default="1.0", help="Time t >= 0.")
    p.add_argument("--y", default=None, help='Semicolon-separated lattice points (default origin).')

    p = sp.add_parser("heat-solve", parents=[common], help="Heat equation with given initial data.")
    p.add_argument("--lattice", required=True, help="Basis rows.")
    p.add_argument("--t", default="1.0", help="Time t >= 0.")
    p.add_argument("--u0", default="delta", help="delta | ones | coset:<code spec> | table:<file>")
    p.add_argument("--radius", type=int, default=3, help="Index radius of the reported box.")
    p.add_argument("--oracle", action="store_true", help="Compare with RK4 time integration.")
    p.add_argument("--oracle-radius", type=int, default=40, help="Box radius for the RK4 oracle.")
    p.add_argument("--step", type=float, default=None,
                   help="RK4 step (default t / ceil(steps_per_unit * t), steps_per_unit from [heat], 10).")

    # Suite
    p = sp.add_parser("suite", parents=[common], help="Run the acceptance matrix.")
    p.add_argument("--quick", action="store_true", help="Representative subset of every block.")

    return ap


def _arguments(args: argparse.Namespace) -> Dict[str, object]:
    skip = {"config", "config_path", "verbose", "log_file", "no_meta", "summary", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the command and write the report; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SpecParseError as e:
        print(f"besselsum: error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except SystemExit as e:
        # --help and --version
        return int(e.code or 0)
    if args.cmd is None:
        parser.print_help(sys.stderr)
        return EXIT_BAD_INPUT

    setup_logging(verbose=args.verbose, log_file=args.log_file)
    logger.debug(f"Command invoked: besselsum {' '.join(argv)}")

    config = load_config(Path(args.config_path) if args.config_path else None)
    args.threads = resolve_threads(args.threads, config)
    args.config = config
    started = datetime.now(timezone.utc).isoformat()

    try:
        timed_items = COMMANDS[args.cmd](args)
    except (SpecParseError, ValueError) as e:
        print(f"besselsum: error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT

    report = RunReport(command=argv, config_digest=config_digest(config, _arguments(args)), started_at=started)
    for item, seconds in timed_items:
        report.add(item, seconds)

    if args.format == "csv":
        emit_csv(report)
    else:
        emit_json(report, include_meta=not args.no_meta)
    if args.summary:
        render_summary(report)
    return EXIT_OK if report.passed else EXIT_FAILED


def main() -> None:
    """Main CLI entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
