"""Public API for the analysis slice."""

from .models import (
    ANALYSIS_MODES,
    AnalysisMode,
    AnalysisRequest,
    AnalysisResult,
    SimulationOutcome,
    VerificationCheck,
)
from .report import ErrorKind, build_error_report, build_report, problem_to_payload
from .run_analysis import RunAnalysis

__all__ = [
    "ANALYSIS_MODES",
    "AnalysisMode",
    "AnalysisRequest",
    "AnalysisResult",
    "ErrorKind",
    "RunAnalysis",
    "SimulationOutcome",
    "VerificationCheck",
    "build_error_report",
    "build_report",
    "problem_to_payload",
]
