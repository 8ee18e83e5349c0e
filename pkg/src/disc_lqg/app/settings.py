"""Application runtime settings."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping


@dataclass(slots=True)
class SimSettings:
    """Monte Carlo defaults used when neither the CLI nor the problem file set a value."""

    dt: float = 1e-3
    trajectories: int = 10_000
    seed: int = 0
    batch_size: int = 2048
    workers: int = 1
    max_default_horizon: float = 100.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.dt) or self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.trajectories <= 0:
            raise ValueError("trajectories must be > 0")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit int")
        if self.batch_size <= 0:
            raise ValueError("batch_size must be > 0")
        if self.workers <= 0:
            raise ValueError("workers must be > 0")
        if self.max_default_horizon <= 0:
            raise ValueError("max_default_horizon must be positive")

    @classmethod
    def from_env(cls, values: Mapping[str, str]) -> SimSettings:
        """Build from raw lower-case overrides such as {"dt": "0.002", "workers": "4"}."""
        defaults = cls()
        try:
            return cls(
                dt=float(values.get("dt", defaults.dt)),
                trajectories=int(values.get("trajectories", defaults.trajectories)),
                seed=int(values.get("seed", defaults.seed)),
                batch_size=int(values.get("batch_size", defaults.batch_size)),
                workers=int(values.get("workers", defaults.workers)),
            )
        except ValueError as exc:
            raise ValueError(f"invalid simulation setting in environment: {exc}") from exc
