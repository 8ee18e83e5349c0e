"""Exact finite-horizon expected cost J(T) of a linear closed loop."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike
from scipy import linalg

from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.gain_pair import GainPair
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.services.matrix_rules import FloatMatrix
from disc_lqg.domain.services.oracle.joint_dynamics import build_joint


def expected_cost_horizon(
    system: LinearSystem,
    belief: InitialBelief,
    cost: CostSpec,
    gains: GainPair,
    horizon: float,
    *,
    x_hat0: ArrayLike | None = None,
) -> float:
    """E int_0^T exp(2 alpha t) (x^T Q x + u^T R u) dt for any alpha and any gains.

    Works for full-state gains (K absent, u = -F x) and for controller/observer pairs.
    No stability assumption is needed since the horizon is finite.
    """
    if horizon < 0.0:
        raise ValueError("horizon must be >= 0")
    if horizon == 0.0:
        return 0.0

    if gains.is_full_state:
        F = gains.require_f()
        a_cl = system.A - system.B @ F
        noise = system.V
        weight = cost.Q + F.T @ cost.R @ F
        moment0 = belief.Sigma0
    else:
        joint = build_joint(system, belief, gains, cost, x_hat0=x_hat0)
        a_cl = joint.Atilde
        noise = joint.Vtilde
        weight = joint.Qtilde
        moment0 = joint.Sigma_tilde0
    return _integrated_moment_cost(a_cl, noise, weight, moment0, cost.alpha, horizon)


def _integrated_moment_cost(
    a_cl: FloatMatrix,
    noise: FloatMatrix,
    weight: FloatMatrix,
    moment0: FloatMatrix,
    alpha: float,
    horizon: float,
) -> float:
    """Integrate the discounted second moment Z(t) = exp(2 alpha t) E[z z^T].

    dZ/dt = A_a Z + Z A_a^T + g V,  dg/dt = 2 alpha g,  dY/dt = Z,
    with A_a = A_cl + alpha I, Z(0) = moment0, g(0) = 1, Y(0) = 0. Then J(T) = tr(weight Y(T)).
    The linear system is propagated with one matrix exponential (column-major vec).
    """
    size = a_cl.shape[0]
    cells = size * size
    a_alpha = a_cl + alpha * np.eye(size)
    eye = np.eye(size)

    generator = np.zeros((2 * cells + 1, 2 * cells + 1))
    generator[:cells, :cells] = np.kron(eye, a_alpha) + np.kron(a_alpha, eye)
    generator[:cells, cells] = noise.reshape(-1, order="F")
    generator[cells, cells] = 2.0 * alpha
    generator[cells + 1 :, :cells] = np.eye(cells)

    start = np.zeros(2 * cells + 1)
    start[:cells] = moment0.reshape(-1, order="F")
    start[cells] = 1.0

    state = linalg.expm(generator * horizon) @ start
    integrated = state[cells + 1 :].reshape((size, size), order="F")
    return float(np.trace(weight @ integrated))
