"""Results of numerical optimality probes on a gain pair."""

from __future__ import annotations

import math
from dataclasses import dataclass

from disc_lqg.domain.services.matrix_rules import FloatMatrix


@dataclass(frozen=True, slots=True, eq=False)
class StationarityReport:
    """Central-difference gradient of the discounted joint cost w.r.t. each gain entry."""

    cost: float
    grad_f: FloatMatrix
    grad_k: FloatMatrix
    step_f: float
    step_k: float

    @property
    def max_grad_f(self) -> float:
        return float(abs(self.grad_f).max()) if self.grad_f.size else 0.0

    @property
    def max_grad_k(self) -> float:
        return float(abs(self.grad_k).max()) if self.grad_k.size else 0.0

    @property
    def max_gradient(self) -> float:
        return max(self.max_grad_f, self.max_grad_k)


@dataclass(frozen=True, slots=True)
class PerturbationScan:
    """Joint cost on a grid of offsets along one F-direction (rows) and one K-direction (columns).

    Offsets whose shifted closed loop is not Hurwitz carry an infinite cost.
    """

    offsets: tuple[float, ...]
    costs: tuple[tuple[float, ...], ...]
    center_cost: float
    min_cost: float
    argmin: tuple[int, int]

    @property
    def center_is_minimum(self) -> bool:
        if not math.isfinite(self.center_cost):
            return False
        return self.center_cost <= self.min_cost + 1e-12 * max(1.0, abs(self.min_cost))
