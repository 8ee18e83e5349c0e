from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping

import pytest

from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.model.problem import Problem, SimBlock
from disc_lqg.usecases.analysis.api import (
    AnalysisRequest,
    AnalysisResult,
    RunAnalysis,
    VerificationCheck,
)
from disc_lqg.usecases.cli.dto import AnalysisRunRequest, SimDefaults
from disc_lqg.usecases.cli.errors import CliParseError, CliSolverError, CliValidationError
from disc_lqg.usecases.cli.service import CliApplicationService

from conftest import GOLDEN_J


class _SilentLogger:
    def info(self, message: str) -> None:
        del message

    def warn(self, message: str) -> None:
        del message

    def error(self, message: str) -> None:
        del message


@dataclass
class _FakeLoader:
    problem: Problem | None = None
    error: Exception | None = None
    paths: list[str] = field(default_factory=list)

    def load(self, path: str) -> Problem:
        self.paths.append(path)
        if self.error is not None:
            raise self.error
        assert self.problem is not None
        return self.problem


@dataclass
class _FakeStore:
    saved: list[tuple[Mapping[str, object], str]] = field(default_factory=list)

    def save(self, report_payload: Mapping[str, object], path: str) -> str:
        self.saved.append((report_payload, path))
        return f"/reports/{path}"


@dataclass
class _RecordingAnalysis:
    requests: list[AnalysisRequest] = field(default_factory=list)

    def run(self, request: AnalysisRequest) -> AnalysisResult:
        self.requests.append(request)
        return RunAnalysis(logger=_SilentLogger()).run(replace(request, mode="design"))


def _service(loader: _FakeLoader, store: _FakeStore | None = None, analysis=None):
    return CliApplicationService(
        analysis=analysis or RunAnalysis(logger=_SilentLogger()),
        problem_loader=loader,
        report_store=store or _FakeStore(),
        sim_defaults=SimDefaults(dt=0.05, trajectories=7, seed=11, batch_size=4, workers=1),
    )


def test_design_run_returns_report_without_saving(golden) -> None:
    store = _FakeStore()

    result = _service(_FakeLoader(problem=golden), store).run_analysis(
        AnalysisRunRequest(mode="design", input_path="golden.json")
    )

    assert result.label == "discounted (alpha=-0.5); Thm 5"
    assert result.report["cost"]["value"] == pytest.approx(GOLDEN_J, abs=1e-7)
    assert result.report_path is None
    assert result.passed
    assert store.saved == []


def test_verify_run_saves_report_to_output_path(golden) -> None:
    store = _FakeStore()

    result = _service(_FakeLoader(problem=golden), store).run_analysis(
        AnalysisRunRequest(mode="verify", input_path="golden.json", output_path="out/report.json")
    )

    assert result.report_path == "/reports/out/report.json"
    assert result.failed_checks == ()
    assert store.saved[0][1] == "out/report.json"
    assert store.saved[0][0]["verification"]["passed"] is True


def test_unreadable_problem_maps_to_parse_error_and_writes_error_report() -> None:
    store = _FakeStore()
    loader = _FakeLoader(error=ValueError("missing required key: A"))

    with pytest.raises(CliParseError, match="missing required key: A"):
        _service(loader, store).run_analysis(
            AnalysisRunRequest(mode="design", input_path="bad.json", output_path="err.json")
        )

    payload, path = store.saved[0]
    assert path == "err.json"
    assert payload["error"]["kind"] == "parse"
    assert payload["error"]["error_type"] == "ValueError"
    assert payload["input"] is None


def test_invalid_problem_maps_to_validation_error(golden) -> None:
    system = golden.system
    broken = replace(
        golden,
        system=LinearSystem(A=system.A, B=system.B, V=system.V, C=system.C, W=[[0.0]]),
    )
    store = _FakeStore()

    with pytest.raises(CliValidationError) as excinfo:
        _service(_FakeLoader(problem=broken), store).run_analysis(
            AnalysisRunRequest(mode="verify", input_path="p.json", output_path="err.json")
        )

    assert excinfo.value.issues == ("W not positive definite",)
    assert store.saved[0][0]["error"]["issues"] == ["W not positive definite"]
    assert store.saved[0][0]["input"]["alpha"] == -0.5


def test_solver_failure_maps_to_solver_error(golden) -> None:
    system = LinearSystem(A=[[1.0]], B=[[0.0]], V=[[1.0]], C=[[1.0]], W=[[1.0]])
    store = _FakeStore()

    with pytest.raises(CliSolverError, match="not stabilizable"):
        _service(_FakeLoader(problem=replace(golden, system=system)), store).run_analysis(
            AnalysisRunRequest(mode="design", input_path="p.json", output_path="err.json")
        )

    assert store.saved[0][0]["error"]["kind"] == "solver"
    assert store.saved[0][0]["error"]["error_type"] == "NotStabilizable"


def test_bad_run_parameters_map_to_validation_error(golden) -> None:
    with pytest.raises(CliValidationError, match="dt must be <= horizon"):
        _service(_FakeLoader(problem=golden)).run_analysis(
            AnalysisRunRequest(mode="simulate", input_path="p.json", dt=2.0, horizon=1.0)
        )


def test_failed_checks_are_returned_not_raised(golden) -> None:
    @dataclass
    class _FailingAnalysis:
        def run(self, request: AnalysisRequest) -> AnalysisResult:
            result = RunAnalysis(logger=_SilentLogger()).run(replace(request, mode="design"))
            failing = VerificationCheck(
                name="stationarity_gradient",
                kind="bound",
                passed=False,
                value=1.0,
                reference=0.0,
                tolerance=1e-5,
            )
            return replace(result, mode="verify", checks=(failing,))

    result = _service(_FakeLoader(problem=golden), analysis=_FailingAnalysis()).run_analysis(
        AnalysisRunRequest(mode="verify", input_path="p.json")
    )

    assert result.failed_checks == ("stationarity_gradient",)
    assert not result.passed
    assert result.report["verification"]["passed"] is False


def test_sim_config_prefers_flags_then_file_then_defaults(golden) -> None:
    problem = replace(golden, sim=SimBlock(dt=0.02, trajectories=30))
    analysis = _RecordingAnalysis()

    _service(_FakeLoader(problem=problem), analysis=analysis).run_analysis(
        AnalysisRunRequest(mode="simulate", input_path="p.json", trajectories=5, workers=2)
    )

    config = analysis.requests[0].sim_config
    assert config is not None
    assert config.trajectories == 5
    assert config.dt == 0.02
    assert config.seed == 11
    assert config.horizon == 60.0
    assert config.batch_size == 4
    assert config.workers == 2
    assert analysis.requests[0].workers == 2


def test_sim_config_uses_defaults_without_file_block(golden_factory) -> None:
    service = _service(_FakeLoader())
    problem = golden_factory(alpha=0.0)

    config = service.resolve_sim_config(
        AnalysisRunRequest(mode="simulate", input_path="p.json", horizon=3.0), problem
    )

    assert (config.dt, config.horizon, config.trajectories, config.seed) == (0.05, 3.0, 7, 11)
