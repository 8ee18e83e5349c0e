"""Kalman-Bucy observer gain and the discounted effective filter noise."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from disc_lqg.domain.model.design_result import DesignResult
from disc_lqg.domain.model.gain_pair import GainPair
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.services.matrix_rules import FloatMatrix
from disc_lqg.domain.services.solvers.riccati import solve_filter_care


def observer_gain(C: ArrayLike, W: ArrayLike, E: ArrayLike) -> FloatMatrix:
    """K = E C^T W^-1 (E and W symmetric)."""
    c = np.asarray(C, dtype=float)
    return np.linalg.solve(np.asarray(W, dtype=float), c @ np.asarray(E, dtype=float)).T


def kalman(system: LinearSystem) -> DesignResult:
    """Steady-state optimal observer; the result carries only K and E."""
    C, _, W = system.output_matrices()
    E, diagnostics = solve_filter_care(system.A, C, system.V, W)
    return DesignResult(
        design="kalman",
        gains=GainPair(K=observer_gain(C, W, E)),
        cost=None,
        E=E,
        diagnostics=(diagnostics,),
    )


def effective_filter_noise(
    system: LinearSystem,
    belief: InitialBelief,
    alpha: float,
) -> FloatMatrix:
    """V - 2 alpha (Sigma0 - mu0 mu0^T); exactly V when alpha == 0."""
    if alpha == 0.0:
        return system.V
    return system.V - 2.0 * alpha * belief.covariance
