"""A complete problem description as read from a problem file."""

from __future__ import annotations

from dataclasses import dataclass

from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem


@dataclass(frozen=True, slots=True)
class SimBlock:
    """Optional simulation parameters stored alongside a problem."""

    dt: float | None = None
    horizon: float | None = None
    trajectories: int | None = None
    seed: int | None = None


@dataclass(frozen=True, slots=True, eq=False)
class Problem:
    system: LinearSystem
    belief: InitialBelief
    cost: CostSpec
    sim: SimBlock | None = None

    @property
    def is_output_feedback(self) -> bool:
        return self.system.has_output
