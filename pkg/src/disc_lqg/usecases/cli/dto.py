"""Request/result DTOs for the CLI use-case facade."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Mapping

RunMode = Literal["design", "verify", "simulate"]


@dataclass(frozen=True, slots=True)
class SimDefaults:
    """Simulation parameters used when neither the CLI nor the problem file set them."""

    dt: float = 1e-3
    trajectories: int = 10_000
    seed: int = 0
    batch_size: int = 2048
    workers: int = 1
    max_default_horizon: float = 100.0


@dataclass(frozen=True, slots=True)
class AnalysisRunRequest:
    mode: RunMode
    input_path: str
    output_path: str | None = None
    seed: int | None = None
    dt: float | None = None
    horizon: float | None = None
    trajectories: int | None = None
    workers: int | None = None
    compare_nondiscounted: bool = False
    stationarity_step: float | None = None

    def __post_init__(self) -> None:
        if not self.input_path or not self.input_path.strip():
            raise ValueError("input_path must not be empty")


@dataclass(frozen=True, slots=True)
class AnalysisRunResult:
    mode: RunMode
    label: str
    report: Mapping[str, object]
    report_path: str | None = None
    failed_checks: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failed_checks
