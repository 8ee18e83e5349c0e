"""Output-feedback LQG: non-discounted and discounted synthesis with dual cost forms."""

from __future__ import annotations

import numpy as np

from disc_lqg.domain.errors import (
    IndefiniteEffectiveNoise,
    InternalConsistencyError,
    NotDetectable,
    NotStabilizable,
)
from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.design_result import CostValue, DesignResult
from disc_lqg.domain.model.gain_pair import GainPair
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.services.design.full_state import controller_gain
from disc_lqg.domain.services.design.observer import effective_filter_noise, observer_gain
from disc_lqg.domain.services.matrix_rules import FloatMatrix, is_psd, is_zero, relative_gap
from disc_lqg.domain.services.solvers.riccati import solve_care, solve_filter_care
from disc_lqg.domain.services.system_rules import shifted_a

DUAL_FORM_RTOL = 1e-8


def lqg(system: LinearSystem, belief: InitialBelief, cost: CostSpec) -> DesignResult:
    """Separation-principle LQG for the non-discounted cost; reports the steady-state rate."""
    if cost.alpha != 0.0:
        raise ValueError("lqg requires alpha == 0; use lqg_discounted")
    C, _, W = system.output_matrices()
    X, x_diag = solve_care(system.A, system.B, cost.Q, cost.R)
    E, e_diag = solve_filter_care(system.A, C, system.V, W)
    gains = GainPair(F=controller_gain(system.B, cost.R, X), K=observer_gain(C, W, E))

    rate, dual_rate = cost_rate_output_feedback(system, cost, gains, X, E)
    _require_agreement("steady-state cost rate", rate, dual_rate)
    return DesignResult(
        design="lqg",
        gains=gains,
        cost=CostValue(kind="steady_rate", value=rate, dual_value=dual_rate),
        X=X,
        E=E,
        diagnostics=(x_diag, e_diag),
    )


def lqg_discounted(system: LinearSystem, belief: InitialBelief, cost: CostSpec) -> DesignResult:
    """Jointly optimal controller/observer gains for the discounted cost.

    The observer Riccati equation uses A_alpha and the effective noise
    V - 2 alpha (Sigma0 - mu0 mu0^T), which must be positive semidefinite.
    """
    C, _, W = system.output_matrices()
    alpha = cost.alpha
    a_alpha = shifted_a(system, alpha)

    try:
        X, x_diag = solve_care(a_alpha, system.B, cost.Q, cost.R)
    except NotStabilizable as exc:
        raise NotStabilizable(f"(A + alpha I, B) is not stabilizable for alpha={alpha:g}") from exc

    noise = effective_filter_noise(system, belief, alpha)
    if not is_psd(noise):
        raise IndefiniteEffectiveNoise(
            f"V - 2 alpha (Sigma0 - mu0 mu0^T) is not positive semidefinite for alpha={alpha:g}"
        )
    try:
        E, e_diag = solve_filter_care(a_alpha, C, noise, W)
    except NotDetectable as exc:
        raise NotDetectable(f"(A + alpha I, C) is not detectable for alpha={alpha:g}") from exc

    gains = GainPair(F=controller_gain(system.B, cost.R, X), K=observer_gain(C, W, E))
    if alpha < 0.0:
        total, dual_total = cost_output_feedback_discounted(system, belief, cost, gains, X, E)
        _require_agreement("discounted expected cost", total, dual_total)
        value = CostValue(kind="finite_total", value=total, dual_value=dual_total)
    elif is_zero(X):
        value = CostValue(kind="finite_total", value=0.0, dual_value=0.0)
    else:
        value = CostValue.infinite()

    return DesignResult(
        design="lqg_discounted",
        gains=gains,
        cost=value,
        X=X,
        E=E,
        diagnostics=(x_diag, e_diag),
    )


def cost_rate_output_feedback(
    system: LinearSystem,
    cost: CostSpec,
    gains: GainPair,
    X: FloatMatrix,
    E: FloatMatrix,
) -> tuple[float, float]:
    """Both forms of the steady-state rate: tr(X K W K^T + E Q) and tr(X V + E F^T R F)."""
    _, _, W = system.output_matrices()
    F = gains.require_f()
    K = gains.require_k()
    first = float(np.trace(X @ K @ W @ K.T + E @ cost.Q))
    second = float(np.trace(X @ system.V + E @ F.T @ cost.R @ F))
    return first, second


def cost_output_feedback_discounted(
    system: LinearSystem,
    belief: InitialBelief,
    cost: CostSpec,
    gains: GainPair,
    X: FloatMatrix,
    E: FloatMatrix,
) -> tuple[float, float]:
    """Both forms of the discounted total for alpha < 0.

    first  = tr(X K W K^T + E Q) / (-2 alpha) + mu0^T X mu0
    second = tr(X V + E F^T R F) / (-2 alpha) + tr(X Sigma0)
    """
    rate_first, rate_second = cost_rate_output_feedback(system, cost, gains, X, E)
    scale = 1.0 / (-2.0 * cost.alpha)
    mu0 = belief.mu0
    first = scale * rate_first + float(mu0 @ X @ mu0)
    second = scale * rate_second + float(np.trace(X @ belief.Sigma0))
    return first, second


def _require_agreement(label: str, first: float, second: float) -> None:
    gap = relative_gap(first, second)
    if gap > DUAL_FORM_RTOL:
        raise InternalConsistencyError(
            f"{label}: dual forms disagree ({first!r} vs {second!r}, relative gap {gap:.3e})"
        )
