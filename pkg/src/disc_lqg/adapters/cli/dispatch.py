"""CLI command dispatch logic."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from disc_lqg.usecases.cli.errors import (
    CliError,
    CliParseError,
    CliSolverError,
    CliValidationError,
)
from disc_lqg.usecases.cli.ports.inbound import CliApplicationUseCasePort

from .commands import to_analysis_run_command
from .mappers import to_analysis_run_request
from .parser import build_parser
from .presenter import print_analysis_result

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_SOLVER = 3
EXIT_PARSE = 4


def run_cli(argv: Sequence[str] | None, app: CliApplicationUseCasePort) -> int:
    raw_argv = list(argv) if argv is not None else sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(raw_argv)
    return dispatch_args(args, app=app, parser=parser)


def dispatch_args(
    args: argparse.Namespace,
    *,
    app: CliApplicationUseCasePort,
    parser: argparse.ArgumentParser,
) -> int:
    if getattr(args, "mode", None) is None:
        parser.print_help()
        return EXIT_VALIDATION

    try:
        request = to_analysis_run_request(to_analysis_run_command(args))
    except ValueError as exc:
        print(f"[ERROR] {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        result = app.run_analysis(request)
    except CliError as exc:
        return _print_cli_error(exc)
    print_analysis_result(result)
    return EXIT_OK if result.passed else EXIT_SOLVER


def exit_code_for(error: CliError) -> int:
    if isinstance(error, CliParseError):
        return EXIT_PARSE
    if isinstance(error, CliValidationError):
        return EXIT_VALIDATION
    if isinstance(error, CliSolverError):
        return EXIT_SOLVER
    return 1


def _print_cli_error(exc: CliError) -> int:
    print(f"[ERROR] {exc}", file=sys.stderr)
    if isinstance(exc, CliValidationError):
        for issue in exc.issues:
            if issue != exc.message:
                print(f"[ERROR]   {issue}", file=sys.stderr)
    return exit_code_for(exc)
