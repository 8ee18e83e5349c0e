"""Argparse CLI definition for disc-lqg."""

from __future__ import annotations

import argparse

from .commands import DESIGN_COMMAND, SIMULATE_COMMAND, VERIFY_COMMAND

EXIT_CODES_EPILOG = (
    "exit codes: 0 success, 2 invalid problem or parameters, "
    "3 solver failure or failed verification check, 4 unreadable or malformed problem file"
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disc-lqg",
        description="Discounted-cost LQG design, verification and Monte Carlo simulation.",
        epilog=EXIT_CODES_EPILOG,
    )
    subparsers = parser.add_subparsers(dest="mode", required=True)

    design = subparsers.add_parser(
        DESIGN_COMMAND,
        help="Synthesize gains and the analytic cost.",
        epilog=EXIT_CODES_EPILOG,
    )
    _add_io_arguments(design)

    verify = subparsers.add_parser(
        VERIFY_COMMAND,
        help="Design, then cross-check with the joint-system cost oracle.",
        epilog=EXIT_CODES_EPILOG,
    )
    _add_io_arguments(verify)
    verify.add_argument(
        "--stationarity-step",
        type=float,
        help="Central-difference step for the gradient check (default 1e-5 * max(1, ||gain||)).",
    )
    _add_workers_argument(verify)

    simulate = subparsers.add_parser(
        SIMULATE_COMMAND,
        help="Design, then estimate the discounted cost by Euler-Maruyama Monte Carlo.",
        epilog=EXIT_CODES_EPILOG,
    )
    _add_io_arguments(simulate)
    simulate.add_argument("--seed", type=int, help="Base seed of the per-trajectory streams.")
    simulate.add_argument("--dt", type=float, help="Integration step.")
    simulate.add_argument(
        "--horizon",
        type=float,
        help="Simulated horizon T (default 30/|alpha| capped at 100 for alpha < 0, else 30).",
    )
    simulate.add_argument("--trajectories", type=int, help="Number of trajectories.")
    simulate.add_argument(
        "--compare-nondiscounted",
        action="store_true",
        help="Also simulate the alpha = 0 design on common random numbers and report the paired difference.",
    )
    _add_workers_argument(simulate)
    return parser


def _add_io_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="Problem JSON file.")
    parser.add_argument(
        "--output",
        help="Report JSON path. When omitted, the report is printed to stdout.",
    )


def _add_workers_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--workers", type=int, help="Worker threads.")
