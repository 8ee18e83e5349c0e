"""JSON-ready report payloads for analysis results and failures."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Literal

import numpy as np

from disc_lqg.domain.model.design_result import DesignResult
from disc_lqg.domain.model.problem import Problem
from disc_lqg.domain.model.simulation import PairedComparison, SimResult
from disc_lqg.usecases.analysis.models import AnalysisResult, SimulationOutcome, VerificationCheck

REPORT_SCHEMA_VERSION = 1
PROBLEM_SCHEMA_VERSION = 1

ErrorKind = Literal["parse", "validation", "solver"]


def problem_to_payload(problem: Problem) -> dict[str, object]:
    """Flat problem-file layout; parses back to an identical problem."""
    system, belief, cost = problem.system, problem.belief, problem.cost
    payload: dict[str, object] = {
        "schema_version": PROBLEM_SCHEMA_VERSION,
        "A": _matrix(system.A),
        "B": _matrix(system.B),
    }
    if system.has_output:
        C, D, W = system.output_matrices()
        payload["C"] = _matrix(C)
        payload["D"] = _matrix(D)
        payload["W"] = _matrix(W)
    payload.update(
        {
            "V": _matrix(system.V),
            "mu0": _matrix(belief.mu0),
            "Sigma0": _matrix(belief.Sigma0),
            "Q": _matrix(cost.Q),
            "R": _matrix(cost.R),
            "alpha": cost.alpha,
        }
    )
    if problem.sim is not None:
        sim = {
            key: value
            for key, value in (
                ("dt", problem.sim.dt),
                ("horizon", problem.sim.horizon),
                ("trajectories", problem.sim.trajectories),
                ("seed", problem.sim.seed),
            )
            if value is not None
        }
        if sim:
            payload["sim"] = sim
    return payload


def build_report(result: AnalysisResult) -> dict[str, object]:
    design = result.design
    verification = None
    if result.mode == "verify":
        verification = {
            "passed": result.all_checks_passed,
            "checks": [_check(check) for check in result.checks],
            "joint_cost": None if result.joint is None else {
                "total": result.joint.total,
                "block_total": result.joint.block_total,
                "J11": result.joint.J11,
                "J22": result.joint.J22,
                "cross_term": result.joint.cross_term,
                "X11_norm": result.joint.X11_norm,
                "X12_norm": result.joint.X12_norm,
            },
            "stationarity": None if result.stationarity is None else {
                "max_grad_f": result.stationarity.max_grad_f,
                "max_grad_k": result.stationarity.max_grad_k,
                "step_f": result.stationarity.step_f,
                "step_k": result.stationarity.step_k,
            },
            "perturbation_scan": None if result.scan is None else {
                "offsets": list(result.scan.offsets),
                "center_cost": result.scan.center_cost,
                "min_cost": result.scan.min_cost,
                "argmin": list(result.scan.argmin),
                "center_is_minimum": result.scan.center_is_minimum,
            },
        }
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "mode": result.mode,
        "design": {
            "name": design.design,
            "label": result.label,
            "discounted": design.discounted,
        },
        "input": problem_to_payload(result.problem),
        **_design_payload(design),
        "closed_loop_eigenvalues": [
            {"re": value.real, "im": value.imag} for value in result.closed_loop_eigenvalues
        ],
        "verification": verification,
        "simulation": None if result.simulation is None else _simulation(result.simulation),
        "error": None,
    }


def build_error_report(
    *,
    mode: str,
    kind: ErrorKind,
    message: str,
    error_type: str,
    issues: Sequence[str] = (),
    problem: Problem | None = None,
) -> dict[str, object]:
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "mode": mode,
        "input": None if problem is None else problem_to_payload(problem),
        "error": {
            "kind": kind,
            "message": message,
            "issues": list(issues),
            "error_type": error_type,
        },
    }


def _design_payload(design: DesignResult) -> dict[str, object]:
    cost = design.cost
    return {
        "gains": {
            "F": None if design.gains.F is None else _matrix(design.gains.F),
            "K": None if design.gains.K is None else _matrix(design.gains.K),
        },
        "riccati": {
            "X": None if design.X is None else _matrix(design.X),
            "E": None if design.E is None else _matrix(design.E),
        },
        "cost": None if cost is None else {
            "kind": cost.kind,
            "value": cost.value,
            "dual_value": cost.dual_value,
        },
        "diagnostics": [
            {
                "equation": diag.equation,
                "residual_norm": diag.residual_norm,
                "relative_residual": diag.relative_residual,
                "data_relative_residual": diag.data_relative_residual,
                "iterations": diag.iterations,
                "spectral_abscissa": diag.spectral_abscissa,
            }
            for diag in design.diagnostics
        ],
    }


def _check(check: VerificationCheck) -> dict[str, object]:
    return {
        "name": check.name,
        "kind": check.kind,
        "passed": check.passed,
        "value": check.value,
        "reference": check.reference,
        "tolerance": check.tolerance,
    }


def _simulation(outcome: SimulationOutcome) -> dict[str, object]:
    config = outcome.config
    payload: dict[str, object] = {
        "config": {
            "dt": config.dt,
            "horizon": config.horizon,
            "trajectories": config.trajectories,
            "seed": config.seed,
            "steps": config.steps,
        },
        "exact_horizon_cost": outcome.horizon_cost,
        **_sim_result(outcome.result),
        "comparison": None,
    }
    if outcome.comparison is not None and outcome.baseline is not None:
        payload["comparison"] = _comparison(outcome.comparison, outcome.baseline)
    return payload


def _sim_result(result: SimResult) -> dict[str, object]:
    return {
        "mean_cost": result.mean_cost,
        "std_error": result.std_error,
        "per_trajectory_costs": list(result.per_trajectory_costs),
    }


def _comparison(comparison: PairedComparison, baseline: DesignResult) -> dict[str, object]:
    return {
        "baseline_design": baseline.design,
        "baseline_gains": _design_payload(baseline)["gains"],
        "mean_difference": comparison.mean_difference,
        "paired_std_error": comparison.paired_std_error,
        "significantly_below_zero": comparison.significantly_below_zero(),
        "baseline": _sim_result(comparison.result_b),
    }


def _matrix(value: np.ndarray) -> list[object]:
    return np.asarray(value, dtype=float).tolist()
