"""Independent cross-checks of a synthesized design."""

from __future__ import annotations

from dataclasses import dataclass

from disc_lqg.domain.model.design_result import DesignResult
from disc_lqg.domain.model.joint_system import JointCostBreakdown
from disc_lqg.domain.model.problem import Problem
from disc_lqg.domain.model.verification import PerturbationScan, StationarityReport
from disc_lqg.domain.services.design import cost_full_state_discounted, max_real_part
from disc_lqg.domain.services.matrix_rules import relative_gap
from disc_lqg.domain.services.oracle import (
    cost_rate_for_gain,
    joint_cost,
    joint_cost_rate,
    perturbation_scan,
    verify_stationarity,
)
from disc_lqg.usecases.analysis.models import VerificationCheck

RESIDUAL_TOL = 1e-9
DUAL_FORM_RTOL = 1e-8
ORACLE_RTOL = 1e-8
BLOCK_RTOL = 1e-10
FULL_STATE_RTOL = 1e-10
SEPARATION_RTOL = 1e-8
STATIONARITY_TOL = 1e-5
EIGENVALUE_MARGIN = 1e-8
SCAN_MAX_GAIN_ENTRIES = 2


@dataclass(frozen=True, slots=True)
class DesignVerification:
    checks: tuple[VerificationCheck, ...]
    joint: JointCostBreakdown | None = None
    stationarity: StationarityReport | None = None
    scan: PerturbationScan | None = None


def relative_check(name: str, value: float, reference: float, tolerance: float) -> VerificationCheck:
    return VerificationCheck(
        name=name,
        kind="relative",
        passed=relative_gap(value, reference) <= tolerance,
        value=value,
        reference=reference,
        tolerance=tolerance,
    )


def bound_check(name: str, value: float, reference: float, tolerance: float) -> VerificationCheck:
    return VerificationCheck(
        name=name,
        kind="bound",
        passed=value < reference + tolerance,
        value=value,
        reference=reference,
        tolerance=tolerance,
    )


def verify_design(
    problem: Problem,
    design: DesignResult,
    eigenvalues: tuple[complex, ...],
    *,
    stationarity_step: float | None = None,
    workers: int = 1,
) -> DesignVerification:
    checks = [
        bound_check(f"{diag.equation}_relative_residual", diag.relative_residual, 0.0, RESIDUAL_TOL)
        for diag in design.diagnostics
    ]
    checks.append(
        bound_check(
            "closed_loop_margin",
            max_real_part(eigenvalues),
            -problem.cost.alpha,
            EIGENVALUE_MARGIN,
        )
    )
    if problem.is_output_feedback:
        return _verify_output_feedback(problem, design, checks, stationarity_step, workers)
    return DesignVerification(checks=tuple(checks + _full_state_checks(problem, design)))


def _full_state_checks(problem: Problem, design: DesignResult) -> list[VerificationCheck]:
    cost = design.cost
    if cost is None or cost.value is None:
        return []
    F = design.gains.require_f()
    system, belief, spec = problem.system, problem.belief, problem.cost
    if spec.alpha == 0.0 and cost.kind == "steady_rate":
        rate = cost_rate_for_gain(system, spec, F)
        return [relative_check("cost_rate_for_gain_matches_design", rate, cost.value, FULL_STATE_RTOL)]
    if spec.alpha < 0.0:
        total = cost_full_state_discounted(system, belief, spec, F)
        return [relative_check("full_state_cost_matches_design", total, cost.value, ORACLE_RTOL)]
    return []


def _verify_output_feedback(
    problem: Problem,
    design: DesignResult,
    checks: list[VerificationCheck],
    stationarity_step: float | None,
    workers: int,
) -> DesignVerification:
    system, belief, spec = problem.system, problem.belief, problem.cost
    cost = design.cost
    if cost is not None and cost.value is not None and cost.dual_value is not None:
        checks.append(relative_check("dual_cost_forms", cost.value, cost.dual_value, DUAL_FORM_RTOL))

    if spec.alpha == 0.0 and cost is not None and cost.value is not None:
        rate = joint_cost_rate(system, spec, design.gains)
        checks.append(relative_check("joint_cost_rate_matches_design", rate, cost.value, ORACLE_RTOL))
        return DesignVerification(checks=tuple(checks))
    if spec.alpha > 0.0 or cost is None or cost.value is None:
        return DesignVerification(checks=tuple(checks))

    joint = joint_cost(system, belief, spec, design.gains)
    checks.append(relative_check("joint_cost_matches_design", joint.total, cost.value, ORACLE_RTOL))
    checks.append(relative_check("joint_block_agreement", joint.block_total, joint.total, BLOCK_RTOL))
    separation_tol = SEPARATION_RTOL * joint.X11_norm if joint.X11_norm > 0.0 else SEPARATION_RTOL
    checks.append(bound_check("separation_cross_block", joint.X12_norm, 0.0, separation_tol))

    estimate_error = joint_cost(system, belief, spec, design.gains, coordinates="estimate_error")
    checks.append(
        relative_check("estimate_error_coordinates", estimate_error.total, cost.value, ORACLE_RTOL)
    )

    stationarity = verify_stationarity(
        system, belief, spec, design.gains, step=stationarity_step, workers=workers
    )
    checks.append(
        bound_check("stationarity_gradient", stationarity.max_gradient, 0.0, STATIONARITY_TOL)
    )

    scan = None
    if system.n * max(system.m, system.p) <= SCAN_MAX_GAIN_ENTRIES:
        scan = perturbation_scan(system, belief, spec, design.gains, workers=workers)
        checks.append(
            VerificationCheck(
                name="perturbation_scan_center_is_minimum",
                kind="bound",
                passed=scan.center_is_minimum,
                value=scan.center_cost,
                reference=scan.min_cost,
                tolerance=1e-12,
            )
        )
    return DesignVerification(
        checks=tuple(checks),
        joint=joint,
        stationarity=stationarity,
        scan=scan,
    )
