"""CLI orchestration service implementation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from disc_lqg.domain.errors import LqgError, ProblemValidationError
from disc_lqg.domain.model.problem import Problem
from disc_lqg.domain.model.simulation import SimConfig
from disc_lqg.domain.services.sim import default_horizon
from disc_lqg.usecases.analysis.api import (
    AnalysisRequest,
    ErrorKind,
    build_error_report,
    build_report,
)
from disc_lqg.usecases.cli.dto import AnalysisRunRequest, AnalysisRunResult, SimDefaults
from disc_lqg.usecases.cli.errors import (
    CliError,
    CliParseError,
    CliSolverError,
    CliValidationError,
)
from disc_lqg.usecases.cli.ports.analysis import AnalysisPort
from disc_lqg.usecases.cli.ports.inbound import CliApplicationUseCasePort
from disc_lqg.usecases.cli.ports.problem_loader import ProblemLoaderPort
from disc_lqg.usecases.cli.ports.report_store import ReportStorePort


@dataclass(slots=True)
class CliApplicationService(CliApplicationUseCasePort):
    """Use-case facade consumed by CLI adapter."""

    analysis: AnalysisPort
    problem_loader: ProblemLoaderPort
    report_store: ReportStorePort
    sim_defaults: SimDefaults = field(default_factory=SimDefaults)

    def run_analysis(self, request: AnalysisRunRequest) -> AnalysisRunResult:
        try:
            problem = self.problem_loader.load(request.input_path)
        except (RuntimeError, ValueError) as exc:
            raise self._fail(request, "parse", CliParseError(str(exc)), exc) from exc

        try:
            analysis_request = AnalysisRequest(
                mode=request.mode,
                problem=problem,
                sim_config=(
                    self.resolve_sim_config(request, problem) if request.mode == "simulate" else None
                ),
                compare_nondiscounted=request.compare_nondiscounted,
                stationarity_step=request.stationarity_step,
                workers=request.workers or self.sim_defaults.workers,
            )
        except ValueError as exc:
            error = CliValidationError(str(exc), issues=(str(exc),))
            raise self._fail(request, "validation", error, exc, problem) from exc

        try:
            result = self.analysis.run(analysis_request)
        except ProblemValidationError as exc:
            error = CliValidationError(exc.message, issues=exc.issues)
            raise self._fail(request, "validation", error, exc, problem) from exc
        except LqgError as exc:
            raise self._fail(request, "solver", CliSolverError(exc.message), exc, problem) from exc
        except ValueError as exc:
            raise self._fail(request, "solver", CliSolverError(str(exc)), exc, problem) from exc

        report = build_report(result)
        report_path = self._save(report, request.output_path)
        return AnalysisRunResult(
            mode=request.mode,
            label=result.label,
            report=report,
            report_path=report_path,
            failed_checks=tuple(check.name for check in result.failed_checks),
        )

    def resolve_sim_config(self, request: AnalysisRunRequest, problem: Problem) -> SimConfig:
        """CLI flag, then problem-file sim block, then configured defaults."""
        file_block = problem.sim
        defaults = self.sim_defaults

        def pick(flag: object, key: str, fallback: object) -> object:
            if flag is not None:
                return flag
            from_file = None if file_block is None else getattr(file_block, key)
            return fallback if from_file is None else from_file

        horizon = pick(
            request.horizon,
            "horizon",
            default_horizon(problem.cost.alpha, max_horizon=defaults.max_default_horizon),
        )
        return SimConfig(
            dt=float(pick(request.dt, "dt", defaults.dt)),
            horizon=float(horizon),
            trajectories=int(pick(request.trajectories, "trajectories", defaults.trajectories)),
            seed=int(pick(request.seed, "seed", defaults.seed)),
            batch_size=defaults.batch_size,
            workers=request.workers or defaults.workers,
        )

    def _fail(
        self,
        request: AnalysisRunRequest,
        kind: ErrorKind,
        error: CliError,
        cause: Exception,
        problem: Problem | None = None,
    ) -> CliError:
        issues = error.issues if isinstance(error, CliValidationError) else ()
        payload = build_error_report(
            mode=request.mode,
            kind=kind,
            message=error.message,
            error_type=type(cause).__name__,
            issues=issues,
            problem=problem,
        )
        self._save(payload, request.output_path)
        return error

    def _save(self, payload: Mapping[str, object], path: str | None) -> str | None:
        if path is None:
            return None
        return self.report_store.save(payload, path)
