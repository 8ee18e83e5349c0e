"""Exact expected cost of arbitrary gain pairs through the joint Lyapunov equation."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from disc_lqg.domain.errors import AlphaNotNegative, InternalConsistencyError, NotDiscountedStable
from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.gain_pair import GainPair
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.joint_system import JointCoordinates, JointCostBreakdown
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.services.matrix_rules import (
    HURWITZ_MARGIN,
    FloatMatrix,
    frobenius,
    relative_gap,
    spectral_abscissa,
)
from disc_lqg.domain.services.oracle.joint_dynamics import build_joint
from disc_lqg.domain.services.solvers.lyapunov import solve_lyapunov, solve_sylvester
from disc_lqg.domain.services.system_rules import shifted_a

BLOCK_AGREEMENT_RTOL = 1e-10

_Blocks = tuple[FloatMatrix, FloatMatrix, FloatMatrix, FloatMatrix, FloatMatrix, FloatMatrix]


def joint_cost(
    system: LinearSystem,
    belief: InitialBelief,
    cost: CostSpec,
    gains: GainPair,
    *,
    coordinates: JointCoordinates = "state_error",
    x_hat0: ArrayLike | None = None,
) -> JointCostBreakdown:
    """Discounted expected cost J = tr(Xtilde (Sigma_tilde0 - Vtilde / 2 alpha)), alpha < 0.

    Xtilde solves Atilde_alpha^T Xtilde + Xtilde Atilde_alpha + Qtilde = 0. The same cost is
    evaluated a second time from the three block equations (two Lyapunov, one Sylvester)
    built straight from the plant and gains; disagreement raises InternalConsistencyError.
    """
    alpha = cost.alpha
    if alpha >= 0.0:
        raise AlphaNotNegative(f"discounted joint cost needs alpha < 0, got {alpha:g}")

    joint = build_joint(system, belief, gains, cost, coordinates=coordinates, x_hat0=x_hat0)
    shifted = joint.Atilde + alpha * np.eye(2 * joint.n)
    abscissa = spectral_abscissa(shifted)
    if abscissa >= -HURWITZ_MARGIN:
        raise NotDiscountedStable(
            f"Atilde + alpha I is not Hurwitz (spectral abscissa {abscissa:.3e}); the cost diverges"
        )

    weight = joint.Sigma_tilde0 - joint.Vtilde / (2.0 * alpha)
    x_tilde, _ = solve_lyapunov(shifted, joint.Qtilde)
    total = float(np.trace(x_tilde @ weight))

    x11, x12, x22 = _block_solution(*_closed_loop_blocks(system, cost, gains, coordinates))
    s11 = joint.block("Sigma_tilde0", 1, 1) - joint.block("Vtilde", 1, 1) / (2.0 * alpha)
    s21 = joint.block("Sigma_tilde0", 2, 1) - joint.block("Vtilde", 2, 1) / (2.0 * alpha)
    s22 = joint.block("Sigma_tilde0", 2, 2) - joint.block("Vtilde", 2, 2) / (2.0 * alpha)
    j11 = float(np.trace(x11 @ s11))
    j22 = float(np.trace(x22 @ s22))
    cross_term = 2.0 * float(np.trace(x12 @ s21))
    block_total = j11 + cross_term + j22

    gap = relative_gap(total, block_total)
    if gap > BLOCK_AGREEMENT_RTOL:
        raise InternalConsistencyError(
            f"joint cost: full ({total!r}) and block ({block_total!r}) evaluations disagree "
            f"(relative gap {gap:.3e})"
        )
    return JointCostBreakdown(
        total=total,
        J11=j11,
        J22=j22,
        X12_norm=frobenius(x12),
        X11_norm=frobenius(x11),
        block_total=block_total,
        cross_term=cross_term,
    )


def _closed_loop_blocks(
    system: LinearSystem,
    cost: CostSpec,
    gains: GainPair,
    coordinates: JointCoordinates,
) -> _Blocks:
    """(A11, A12, A22, Q11, Q12, Q22) of the shifted joint closed loop."""
    F = gains.require_f()
    K = gains.require_k()
    C, _, _ = system.output_matrices()
    a_alpha = shifted_a(system, cost.alpha)
    frf = F.T @ cost.R @ F
    a11 = a_alpha - system.B @ F
    a22 = a_alpha - K @ C
    if coordinates == "state_error":
        return a11, -system.B @ F, a22, cost.Q + frf, frf, frf
    return a11, -K @ C, a22, cost.Q + frf, -cost.Q, cost.Q


def _block_solution(
    a11: FloatMatrix,
    a12: FloatMatrix,
    a22: FloatMatrix,
    q11: FloatMatrix,
    q12: FloatMatrix,
    q22: FloatMatrix,
) -> tuple[FloatMatrix, FloatMatrix, FloatMatrix]:
    x11, _ = solve_lyapunov(a11, q11)
    x12 = solve_sylvester(a11.T, a22, -(x11 @ a12 + q12))
    x22, _ = solve_lyapunov(a22, q22 + a12.T @ x12 + x12.T @ a12)
    return x11, x12, x22


def joint_cost_rate(system: LinearSystem, cost: CostSpec, gains: GainPair) -> float:
    """Steady-state rate tr(Xtilde Vtilde) of the non-discounted closed loop (alpha = 0).

    Raises NotHurwitz when Atilde is not Hurwitz.
    """
    if cost.alpha != 0.0:
        raise ValueError("joint_cost_rate requires alpha == 0")
    belief = InitialBelief(mu0=np.zeros(system.n), Sigma0=np.zeros((system.n, system.n)))
    joint = build_joint(system, belief, gains, cost)
    x_tilde, _ = solve_lyapunov(joint.Atilde, joint.Qtilde)
    return float(np.trace(x_tilde @ joint.Vtilde))


def cost_rate_for_gain(system: LinearSystem, cost: CostSpec, F: ArrayLike) -> float:
    """Steady-state rate tr(X V) of full-state feedback u = -F x (alpha = 0).

    X solves (A - BF)^T X + X (A - BF) + Q + F^T R F = 0; NotHurwitz when A - BF is not.
    """
    if cost.alpha != 0.0:
        raise ValueError("cost_rate_for_gain requires alpha == 0")
    f = np.asarray(F, dtype=float)
    X, _ = solve_lyapunov(system.A - system.B @ f, cost.Q + f.T @ cost.R @ f)
    return float(np.trace(X @ system.V))
