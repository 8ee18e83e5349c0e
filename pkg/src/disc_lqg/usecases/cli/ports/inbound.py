"""Inbound port for CLI orchestration use cases."""

from __future__ import annotations

from typing import Protocol

from disc_lqg.usecases.cli.dto import AnalysisRunRequest, AnalysisRunResult


class CliApplicationUseCasePort(Protocol):
    """Use cases consumed by the CLI adapter."""

    def run_analysis(self, request: AnalysisRunRequest) -> AnalysisRunResult:
        ...
