"""Use case: design, verify or simulate one problem."""

from __future__ import annotations

from dataclasses import dataclass, replace

from disc_lqg.domain.model.design_result import DesignResult
from disc_lqg.domain.model.problem import Problem
from disc_lqg.domain.model.simulation import SimConfig
from disc_lqg.domain.services.design import closed_loop_eigenvalues
from disc_lqg.domain.services.oracle import expected_cost_horizon
from disc_lqg.domain.services.sim import compare_designs, simulate
from disc_lqg.domain.services.system_rules import ensure_valid
from disc_lqg.usecases.analysis.models import AnalysisRequest, AnalysisResult, SimulationOutcome
from disc_lqg.usecases.analysis.ports.logger import Logger
from disc_lqg.usecases.analysis.select_design import design_label, select_design
from disc_lqg.usecases.analysis.verify_design import RESIDUAL_TOL, verify_design


@dataclass(slots=True)
class RunAnalysis:
    """Validate the problem, synthesize gains, then run the mode-specific extras."""

    logger: Logger

    def run(self, request: AnalysisRequest) -> AnalysisResult:
        problem = request.problem
        ensure_valid(problem.system, problem.belief, problem.cost)

        design = select_design(problem)
        label = design_label(problem, design)
        self.logger.info(f"design: {label}")
        for diag in design.diagnostics:
            self.logger.info(
                f"{diag.equation}: relative residual {diag.relative_residual:.3e}, "
                f"newton steps {diag.iterations}"
            )
            data_residual = diag.data_relative_residual
            if data_residual is not None and data_residual > RESIDUAL_TOL:
                self.logger.warn(
                    f"{diag.equation}: residual {data_residual:.3e} relative to the constant "
                    "term only; the solution is badly scaled"
                )
        eigenvalues = closed_loop_eigenvalues(problem.system, design.gains)
        result = AnalysisResult(
            mode=request.mode,
            problem=problem,
            design=design,
            label=label,
            closed_loop_eigenvalues=eigenvalues,
        )

        if request.mode == "verify":
            verification = verify_design(
                problem,
                design,
                eigenvalues,
                stationarity_step=request.stationarity_step,
                workers=request.workers,
            )
            for check in verification.checks:
                if check.passed:
                    self.logger.info(f"check {check.name}: ok")
                else:
                    self.logger.warn(
                        f"check {check.name}: FAILED (value={check.value!r}, "
                        f"reference={check.reference!r}, tolerance={check.tolerance:g})"
                    )
            result = replace(
                result,
                checks=verification.checks,
                joint=verification.joint,
                stationarity=verification.stationarity,
                scan=verification.scan,
            )

        if request.mode == "simulate":
            assert request.sim_config is not None
            outcome = self._simulate(problem, design, request.sim_config, request.compare_nondiscounted)
            result = replace(result, simulation=outcome)
        return result

    def _simulate(
        self,
        problem: Problem,
        design: DesignResult,
        config: SimConfig,
        compare_nondiscounted: bool,
    ) -> SimulationOutcome:
        system, belief, cost = problem.system, problem.belief, problem.cost
        self.logger.info(
            f"simulating {config.trajectories} trajectories, dt={config.dt:g}, "
            f"horizon={config.horizon:g}, seed={config.seed}"
        )
        horizon_cost = expected_cost_horizon(
            system, belief, cost, design.gains, config.horizon, x_hat0=config.x_hat0_override
        )

        if compare_nondiscounted and cost.alpha != 0.0:
            baseline = select_design(replace(problem, cost=cost.with_alpha(0.0)))
            self.logger.info(f"comparing against {baseline.design} on common random numbers")
            comparison = compare_designs(
                system, belief, cost, design.gains, baseline.gains, config, progress=self._progress
            )
            self.logger.info(
                f"paired difference {comparison.mean_difference:.6g} "
                f"+/- {comparison.paired_std_error:.3g}"
            )
            return SimulationOutcome(
                config=config,
                result=comparison.result_a,
                horizon_cost=horizon_cost,
                comparison=comparison,
                baseline=baseline,
            )

        if compare_nondiscounted:
            self.logger.warn("alpha == 0: nothing to compare against, running a single design")
        sim_result = simulate(system, belief, cost, design.gains, config, progress=self._progress)
        self.logger.info(
            f"mean cost {sim_result.mean_cost:.6g} +/- {sim_result.std_error:.3g} "
            f"(exact J(T) = {horizon_cost:.6g})"
        )
        return SimulationOutcome(config=config, result=sim_result, horizon_cost=horizon_cost)

    def _progress(self, done: int, total: int) -> None:
        self.logger.info(f"simulated {done}/{total} trajectories")
