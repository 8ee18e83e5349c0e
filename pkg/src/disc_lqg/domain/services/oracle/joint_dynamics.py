"""Assembly of the 2n-dimensional closed loop of plant, observer and control law."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.gain_pair import GainPair
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.joint_system import JointCoordinates, JointSystem
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.services.matrix_rules import symmetrize


def build_joint(
    system: LinearSystem,
    belief: InitialBelief,
    gains: GainPair,
    cost: CostSpec,
    *,
    coordinates: JointCoordinates = "state_error",
    x_hat0: ArrayLike | None = None,
) -> JointSystem:
    """Closed loop under u = -F x_hat with the observer driven by the innovation.

    The estimation error is e = x_hat - x. `x_hat0` defaults to mu0; any other value
    changes the initial moments only.

    state_error (x, e):
        Atilde = [A - BF, -BF; 0, A - KC]
        Vtilde = [V, -V; -V, K W K^T + V]
        Qtilde = [Q + F^T R F, F^T R F; F^T R F, F^T R F]
    estimate_error (x_hat, e):
        Atilde = [A - BF, -KC; 0, A - KC]
        Vtilde = [K W K^T, K W K^T; K W K^T, K W K^T + V]
        Qtilde = [Q + F^T R F, -Q; -Q, Q]
    """
    gains.check_dimensions(n=system.n, m=system.m, p=system.p)
    F = gains.require_f()
    K = gains.require_k()
    C, _, W = system.output_matrices()
    A, B, V = system.A, system.B, system.V
    Q = cost.Q
    n = system.n

    mu0 = belief.mu0
    estimate0 = mu0 if x_hat0 is None else np.asarray(x_hat0, dtype=float).reshape(n)
    error0 = estimate0 - mu0
    # E[e0 e0^T] with e0 = x_hat0 - x0
    error_moment = (
        np.outer(estimate0, estimate0)
        - np.outer(mu0, estimate0)
        - np.outer(estimate0, mu0)
        + belief.Sigma0
    )

    kwk = K @ W @ K.T
    frf = F.T @ cost.R @ F
    zeros = np.zeros((n, n))
    if coordinates == "state_error":
        a_tilde = np.block([[A - B @ F, -B @ F], [zeros, A - K @ C]])
        v_tilde = np.block([[V, -V], [-V, kwk + V]])
        q_tilde = np.block([[Q + frf, frf], [frf, frf]])
        mu_tilde0 = np.concatenate([mu0, error0])
        cross = np.outer(mu0, estimate0) - belief.Sigma0
        sigma_tilde0 = np.block([[belief.Sigma0, cross], [cross.T, error_moment]])
    elif coordinates == "estimate_error":
        a_tilde = np.block([[A - B @ F, -K @ C], [zeros, A - K @ C]])
        v_tilde = np.block([[kwk, kwk], [kwk, kwk + V]])
        q_tilde = np.block([[Q + frf, -Q], [-Q, Q]])
        mu_tilde0 = np.concatenate([estimate0, error0])
        cross = np.outer(estimate0, error0)
        sigma_tilde0 = np.block([[np.outer(estimate0, estimate0), cross], [cross.T, error_moment]])
    else:
        raise ValueError(f"unknown joint coordinates: {coordinates}")

    return JointSystem(
        coordinates=coordinates,
        Atilde=a_tilde,
        Vtilde=symmetrize(v_tilde),
        Qtilde=symmetrize(q_tilde),
        mu_tilde0=mu_tilde0,
        Sigma_tilde0=symmetrize(sigma_tilde0),
    )
