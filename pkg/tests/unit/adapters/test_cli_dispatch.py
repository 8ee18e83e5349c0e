from __future__ import annotations

import json
from dataclasses import dataclass, field

import pytest

from disc_lqg.adapters.cli.commands import AnalysisRunCommand, to_analysis_run_command
from disc_lqg.adapters.cli.dispatch import (
    EXIT_OK,
    EXIT_PARSE,
    EXIT_SOLVER,
    EXIT_VALIDATION,
    dispatch_args,
    exit_code_for,
    run_cli,
)
from disc_lqg.adapters.cli.mappers import to_analysis_run_request
from disc_lqg.adapters.cli.parser import build_parser
from disc_lqg.usecases.cli.dto import AnalysisRunRequest, AnalysisRunResult
from disc_lqg.usecases.cli.errors import (
    CliError,
    CliParseError,
    CliSolverError,
    CliValidationError,
)


@dataclass
class _FakeApp:
    result: AnalysisRunResult | None = None
    error: CliError | None = None
    calls: list[AnalysisRunRequest] = field(default_factory=list)

    def run_analysis(self, request: AnalysisRunRequest) -> AnalysisRunResult:
        self.calls.append(request)
        if self.error is not None:
            raise self.error
        if self.result is not None:
            return self.result
        return AnalysisRunResult(
            mode=request.mode,
            label="discounted (alpha=-0.5); Thm 5",
            report={"schema_version": 1, "error": None},
            report_path=request.output_path,
        )


def test_parser_reads_simulation_flags() -> None:
    args = build_parser().parse_args(
        [
            "simulate",
            "--input",
            "p.json",
            "--seed",
            "9",
            "--dt",
            "0.002",
            "--horizon",
            "12",
            "--trajectories",
            "500",
            "--compare-nondiscounted",
            "--workers",
            "4",
        ]
    )

    command = to_analysis_run_command(args)

    assert command == AnalysisRunCommand(
        mode="simulate",
        input_path="p.json",
        output_path=None,
        seed=9,
        dt=0.002,
        horizon=12.0,
        trajectories=500,
        workers=4,
        compare_nondiscounted=True,
    )


def test_verify_command_has_no_simulation_fields() -> None:
    args = build_parser().parse_args(
        ["verify", "--input", "p.json", "--output", "r.json", "--stationarity-step", "1e-4"]
    )

    command = to_analysis_run_command(args)

    assert command.mode == "verify"
    assert command.output_path == "r.json"
    assert command.stationarity_step == 1e-4
    assert command.seed is None
    assert command.compare_nondiscounted is False


def test_parser_requires_input() -> None:
    with pytest.raises(SystemExit):
        build_parser().parse_args(["design"])


def test_mapper_copies_every_field() -> None:
    command = AnalysisRunCommand(
        mode="simulate",
        input_path="p.json",
        output_path="r.json",
        seed=1,
        dt=0.01,
        horizon=3.0,
        trajectories=10,
        workers=2,
        compare_nondiscounted=True,
        stationarity_step=None,
    )

    request = to_analysis_run_request(command)

    assert request == AnalysisRunRequest(
        mode="simulate",
        input_path="p.json",
        output_path="r.json",
        seed=1,
        dt=0.01,
        horizon=3.0,
        trajectories=10,
        workers=2,
        compare_nondiscounted=True,
    )


def test_report_goes_to_stdout_when_no_output_path(capsys: pytest.CaptureFixture[str]) -> None:
    app = _FakeApp()

    code = run_cli(["design", "--input", "p.json"], app)

    captured = capsys.readouterr()
    assert code == EXIT_OK
    assert json.loads(captured.out) == {"schema_version": 1, "error": None}
    assert "[INFO] design: discounted (alpha=-0.5); Thm 5" in captured.err
    assert app.calls[0].input_path == "p.json"


def test_written_report_is_announced_on_stderr(capsys: pytest.CaptureFixture[str]) -> None:
    code = run_cli(["verify", "--input", "p.json", "--output", "r.json"], _FakeApp())

    captured = capsys.readouterr()
    assert code == EXIT_OK
    assert captured.out == ""
    assert "[INFO] report written to r.json" in captured.err


def test_failed_checks_exit_with_solver_code(capsys: pytest.CaptureFixture[str]) -> None:
    app = _FakeApp(
        result=AnalysisRunResult(
            mode="verify",
            label="discounted (alpha=-0.5); Thm 5",
            report={},
            report_path="r.json",
            failed_checks=("stationarity_gradient",),
        )
    )

    code = run_cli(["verify", "--input", "p.json", "--output", "r.json"], app)

    assert code == EXIT_SOLVER
    assert "verification check failed: stationarity_gradient" in capsys.readouterr().err


@pytest.mark.parametrize(
    ("error", "expected"),
    [
        (CliParseError("bad json"), EXIT_PARSE),
        (CliValidationError("W not positive definite"), EXIT_VALIDATION),
        (CliSolverError("(A, B) is not stabilizable"), EXIT_SOLVER),
        (CliError("other"), 1),
    ],
)
def test_errors_map_to_exit_codes(error: CliError, expected: int) -> None:
    assert exit_code_for(error) == expected
    assert run_cli(["design", "--input", "p.json"], _FakeApp(error=error)) == expected


def test_validation_issues_are_listed(capsys: pytest.CaptureFixture[str]) -> None:
    error = CliValidationError(
        "W not positive definite; R not positive definite",
        issues=("W not positive definite", "R not positive definite"),
    )

    code = run_cli(["design", "--input", "p.json"], _FakeApp(error=error))

    err = capsys.readouterr().err
    assert code == EXIT_VALIDATION
    assert "[ERROR]   W not positive definite" in err
    assert "[ERROR]   R not positive definite" in err


def test_blank_input_path_is_rejected_before_the_app(capsys: pytest.CaptureFixture[str]) -> None:
    app = _FakeApp()
    parser = build_parser()
    args = parser.parse_args(["design", "--input", " "])

    code = dispatch_args(args, app=app, parser=parser)

    assert code == EXIT_VALIDATION
    assert app.calls == []
    assert "input_path must not be empty" in capsys.readouterr().err
