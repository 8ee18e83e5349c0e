"""Request/result models of the analysis slice."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from disc_lqg.domain.model.design_result import DesignResult
from disc_lqg.domain.model.joint_system import JointCostBreakdown
from disc_lqg.domain.model.problem import Problem
from disc_lqg.domain.model.simulation import PairedComparison, SimConfig, SimResult
from disc_lqg.domain.model.verification import PerturbationScan, StationarityReport

AnalysisMode = Literal["design", "verify", "simulate"]
CheckKind = Literal["relative", "bound"]

ANALYSIS_MODES: tuple[AnalysisMode, ...] = ("design", "verify", "simulate")


@dataclass(frozen=True, slots=True)
class AnalysisRequest:
    mode: AnalysisMode
    problem: Problem
    sim_config: SimConfig | None = None
    compare_nondiscounted: bool = False
    stationarity_step: float | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        if self.mode not in ANALYSIS_MODES:
            raise ValueError(f"unknown analysis mode: {self.mode}")
        if self.mode == "simulate" and self.sim_config is None:
            raise ValueError("simulate mode requires a simulation config")
        if self.stationarity_step is not None and self.stationarity_step <= 0.0:
            raise ValueError("stationarity_step must be > 0")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True, slots=True)
class VerificationCheck:
    """One named cross-check.

    relative: passed when |value - reference| <= tolerance * max(1, |value|, |reference|).
    bound:    passed when value < reference + tolerance.
    """

    name: str
    kind: CheckKind
    passed: bool
    value: float
    reference: float
    tolerance: float


@dataclass(frozen=True, slots=True)
class SimulationOutcome:
    config: SimConfig
    result: SimResult
    horizon_cost: float
    comparison: PairedComparison | None = None
    baseline: DesignResult | None = None


@dataclass(frozen=True, slots=True)
class AnalysisResult:
    mode: AnalysisMode
    problem: Problem
    design: DesignResult
    label: str
    closed_loop_eigenvalues: tuple[complex, ...]
    checks: tuple[VerificationCheck, ...] = ()
    joint: JointCostBreakdown | None = None
    stationarity: StationarityReport | None = None
    scan: PerturbationScan | None = None
    simulation: SimulationOutcome | None = None

    @property
    def failed_checks(self) -> tuple[VerificationCheck, ...]:
        return tuple(check for check in self.checks if not check.passed)

    @property
    def all_checks_passed(self) -> bool:
        return not self.failed_checks
