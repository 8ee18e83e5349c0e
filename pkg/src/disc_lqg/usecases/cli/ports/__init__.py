"""Ports for the cli slice."""

from .analysis import AnalysisPort
from .inbound import CliApplicationUseCasePort
from .problem_loader import ProblemLoaderPort
from .report_store import ReportStorePort

__all__ = [
    "AnalysisPort",
    "CliApplicationUseCasePort",
    "ProblemLoaderPort",
    "ReportStorePort",
]
