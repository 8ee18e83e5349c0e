"""Pick the synthesis routine matching the problem structure."""

from __future__ import annotations

from disc_lqg.domain.model.design_result import DesignResult
from disc_lqg.domain.model.problem import Problem
from disc_lqg.domain.services.design import lqg, lqg_discounted, lqr, lqr_discounted

DESIGN_TAGS = {
    "lqr": "Thm 1",
    "lqr_discounted": "Thm 2",
    "kalman": "Thm 3",
    "lqg": "Thm 4",
    "lqg_discounted": "Thm 5",
}


def select_design(problem: Problem) -> DesignResult:
    """Full-state designs when the problem has no measured output, output feedback otherwise."""
    system, belief, cost = problem.system, problem.belief, problem.cost
    if problem.is_output_feedback:
        if cost.alpha == 0.0:
            return lqg(system, belief, cost)
        return lqg_discounted(system, belief, cost)
    if cost.alpha == 0.0:
        return lqr(system, belief, cost)
    return lqr_discounted(system, belief, cost)


def design_label(problem: Problem, design: DesignResult) -> str:
    alpha = problem.cost.alpha
    if alpha == 0.0:
        regime = "non-discounted"
    elif alpha < 0.0:
        regime = f"discounted (alpha={alpha:g})"
    else:
        regime = f"prescribed degree of stability (alpha={alpha:g})"
    return f"{regime}; {DESIGN_TAGS[design.design]}"
