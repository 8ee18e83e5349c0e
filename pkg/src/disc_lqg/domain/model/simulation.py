"""Monte Carlo configuration and results."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

_MAX_SEED = 2**64 - 1


@dataclass(frozen=True, slots=True, eq=False)
class SimConfig:
    """Euler-Maruyama run settings."""

    dt: float
    horizon: float
    trajectories: int
    seed: int
    x_hat0_override: NDArray[np.float64] | None = None
    batch_size: int = 2048
    workers: int = 1

    def __post_init__(self) -> None:
        if not math.isfinite(self.dt) or self.dt <= 0.0:
            raise ValueError("dt must be > 0")
        if not math.isfinite(self.horizon) or self.horizon <= 0.0:
            raise ValueError("horizon must be > 0")
        if self.dt > self.horizon:
            raise ValueError("dt must be <= horizon")
        if type(self.trajectories) is not int or self.trajectories < 1:
            raise ValueError("trajectories must be a positive int")
        if type(self.seed) is not int or not 0 <= self.seed <= _MAX_SEED:
            raise ValueError("seed must be an unsigned 64-bit int")
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.x_hat0_override is not None:
            override = np.array(self.x_hat0_override, dtype=float).reshape(-1)
            override.setflags(write=False)
            object.__setattr__(self, "x_hat0_override", override)

    @property
    def steps(self) -> int:
        return max(1, int(round(self.horizon / self.dt)))


@dataclass(frozen=True, slots=True)
class SimResult:
    mean_cost: float
    std_error: float
    per_trajectory_costs: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.std_error < 0.0:
            raise ValueError("std_error must be >= 0")

    @property
    def trajectories(self) -> int:
        return len(self.per_trajectory_costs)


@dataclass(frozen=True, slots=True)
class PairedComparison:
    """Statistics of cost(A) - cost(B) over common random numbers."""

    mean_difference: float
    paired_std_error: float
    result_a: SimResult
    result_b: SimResult
    per_trajectory_differences: tuple[float, ...]

    def significantly_below_zero(self, *, sigmas: float = 3.0) -> bool:
        return self.mean_difference < -sigmas * self.paired_std_error
