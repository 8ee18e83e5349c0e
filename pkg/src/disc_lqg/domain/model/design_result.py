"""Outputs of gain synthesis."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from disc_lqg.domain.model.gain_pair import GainPair
from disc_lqg.domain.model.solve_diagnostics import SolveDiagnostics
from disc_lqg.domain.services.matrix_rules import FloatMatrix

CostKind = Literal["finite_total", "steady_rate", "infinite"]
DesignName = Literal["lqr", "lqr_discounted", "kalman", "lqg", "lqg_discounted"]


@dataclass(frozen=True, slots=True)
class CostValue:
    """Expected total cost, steady-state cost rate, or divergence marker.

    `dual_value` carries the second of two algebraically equivalent cost expressions
    when the design computes both.
    """

    kind: CostKind
    value: float | None = None
    dual_value: float | None = None

    def __post_init__(self) -> None:
        if self.kind == "infinite":
            if self.value is not None or self.dual_value is not None:
                raise ValueError("infinite cost carries no value")
            return
        if self.value is None or not math.isfinite(self.value):
            raise ValueError(f"{self.kind} cost requires a finite value")

    @classmethod
    def infinite(cls) -> CostValue:
        return cls(kind="infinite")

    @property
    def is_finite(self) -> bool:
        return self.kind != "infinite"


@dataclass(frozen=True, slots=True, eq=False)
class DesignResult:
    """Gains with the Riccati solutions they were built from.

    X is absent for observer-only designs, E for full-state designs.
    """

    design: DesignName
    gains: GainPair
    cost: CostValue | None
    X: FloatMatrix | None = None
    E: FloatMatrix | None = None
    diagnostics: tuple[SolveDiagnostics, ...] = ()

    @property
    def discounted(self) -> bool:
        return self.design in ("lqr_discounted", "lqg_discounted")
