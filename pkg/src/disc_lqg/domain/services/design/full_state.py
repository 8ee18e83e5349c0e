"""Full-state regulators: non-discounted and discounted LQR."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from disc_lqg.domain.errors import AlphaNotNegative, NotStabilizable
from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.design_result import CostValue, DesignResult
from disc_lqg.domain.model.gain_pair import GainPair
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.services.matrix_rules import FloatMatrix, is_zero
from disc_lqg.domain.services.solvers.lyapunov import solve_lyapunov
from disc_lqg.domain.services.solvers.riccati import solve_care
from disc_lqg.domain.services.system_rules import shifted_a


def controller_gain(B: ArrayLike, R: ArrayLike, X: ArrayLike) -> FloatMatrix:
    """F = R^-1 B^T X."""
    return np.linalg.solve(np.asarray(R, dtype=float), np.asarray(B, dtype=float).T @ X)


def lqr(system: LinearSystem, belief: InitialBelief, cost: CostSpec) -> DesignResult:
    """Optimal full-state feedback for the non-discounted cost.

    Without process noise the expected total tr(X Sigma0) is finite; otherwise the total
    diverges and the steady-state rate tr(X V) is reported.
    """
    if cost.alpha != 0.0:
        raise ValueError("lqr requires alpha == 0; use lqr_discounted")
    X, diagnostics = solve_care(system.A, system.B, cost.Q, cost.R)
    F = controller_gain(system.B, cost.R, X)
    if is_zero(system.V):
        value = CostValue(kind="finite_total", value=float(np.trace(X @ belief.Sigma0)))
    else:
        value = CostValue(kind="steady_rate", value=float(np.trace(X @ system.V)))
    return DesignResult(
        design="lqr",
        gains=GainPair(F=F),
        cost=value,
        X=X,
        diagnostics=(diagnostics,),
    )


def lqr_discounted(system: LinearSystem, belief: InitialBelief, cost: CostSpec) -> DesignResult:
    """Optimal full-state feedback for the discounted cost, using A_alpha = A + alpha I."""
    if cost.alpha == 0.0:
        return lqr(system, belief, cost)

    alpha = cost.alpha
    try:
        X, diagnostics = solve_care(shifted_a(system, alpha), system.B, cost.Q, cost.R)
    except NotStabilizable as exc:
        raise NotStabilizable(f"(A + alpha I, B) is not stabilizable for alpha={alpha:g}") from exc
    F = controller_gain(system.B, cost.R, X)
    return DesignResult(
        design="lqr_discounted",
        gains=GainPair(F=F),
        cost=_discounted_full_state_cost(system, belief, alpha, X),
        X=X,
        diagnostics=(diagnostics,),
    )


def _discounted_full_state_cost(
    system: LinearSystem,
    belief: InitialBelief,
    alpha: float,
    X: FloatMatrix,
) -> CostValue:
    if alpha < 0.0:
        weight = belief.Sigma0 - system.V / (2.0 * alpha)
        return CostValue(kind="finite_total", value=float(np.trace(X @ weight)))
    # alpha > 0: noise-free trajectories still decay faster than exp(-alpha t)
    if is_zero(system.V) or is_zero(X):
        return CostValue(kind="finite_total", value=float(np.trace(X @ belief.Sigma0)))
    return CostValue.infinite()


def cost_full_state_discounted(
    system: LinearSystem,
    belief: InitialBelief,
    cost: CostSpec,
    F: ArrayLike,
) -> float:
    """Discounted expected cost of an arbitrary full-state gain F (alpha < 0).

    Raises NotHurwitz when A_alpha - B F is not Hurwitz (the cost diverges).
    """
    if cost.alpha >= 0.0:
        raise AlphaNotNegative(f"discounted total cost needs alpha < 0, got {cost.alpha:g}")
    f = np.asarray(F, dtype=float)
    closed_loop = shifted_a(system, cost.alpha) - system.B @ f
    X, _ = solve_lyapunov(closed_loop, cost.Q + f.T @ cost.R @ f)
    return float(np.trace(X @ (belief.Sigma0 - system.V / (2.0 * cost.alpha))))
