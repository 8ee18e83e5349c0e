"""Outbound port to the analysis use case."""

from __future__ import annotations

from typing import Protocol

from disc_lqg.usecases.analysis.api import AnalysisRequest, AnalysisResult


class AnalysisPort(Protocol):
    def run(self, request: AnalysisRequest) -> AnalysisResult:
        ...
