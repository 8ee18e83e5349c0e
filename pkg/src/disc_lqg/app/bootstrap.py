"""Application composition root."""

from __future__ import annotations

from disc_lqg.app.settings import SimSettings
from disc_lqg.app.wiring.logging import StderrLogger
from disc_lqg.infrastructure.filesystem.problem_json_store import ProblemJsonStore
from disc_lqg.infrastructure.filesystem.report_json_store import ReportJsonStore
from disc_lqg.usecases.analysis.api import RunAnalysis
from disc_lqg.usecases.cli.dto import SimDefaults
from disc_lqg.usecases.cli.ports.inbound import CliApplicationUseCasePort
from disc_lqg.usecases.cli.service import CliApplicationService


def build_cli_application(settings: SimSettings | None = None) -> CliApplicationUseCasePort:
    """Build concrete CLI use-case application implementation."""
    sim = settings or SimSettings()
    return CliApplicationService(
        analysis=RunAnalysis(logger=StderrLogger()),
        problem_loader=ProblemJsonStore(),
        report_store=ReportJsonStore(),
        sim_defaults=SimDefaults(
            dt=sim.dt,
            trajectories=sim.trajectories,
            seed=sim.seed,
            batch_size=sim.batch_size,
            workers=sim.workers,
            max_default_horizon=sim.max_default_horizon,
        ),
    )
