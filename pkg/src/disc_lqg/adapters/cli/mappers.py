"""Mappings from adapter command DTOs to CLI use-case DTOs."""

from __future__ import annotations

from disc_lqg.adapters.cli.commands import AnalysisRunCommand
from disc_lqg.usecases.cli.dto import AnalysisRunRequest


def to_analysis_run_request(command: AnalysisRunCommand) -> AnalysisRunRequest:
    return AnalysisRunRequest(
        mode=command.mode,
        input_path=command.input_path,
        output_path=command.output_path,
        seed=command.seed,
        dt=command.dt,
        horizon=command.horizon,
        trajectories=command.trajectories,
        workers=command.workers,
        compare_nondiscounted=command.compare_nondiscounted,
        stationarity_step=command.stationarity_step,
    )
