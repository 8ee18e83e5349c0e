"""Shared problem fixtures."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
import pytest

from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.model.problem import Problem

GOLDEN_X = (np.sqrt(5.0) - 1.0) / 2.0
GOLDEN_J = (np.sqrt(5.0) + 1.0) / 2.0

RandomProblemFactory = Callable[..., Problem]


def golden_problem(alpha: float = -0.5) -> Problem:
    """a=0, b=c=1, q=r=V=W=1, mu0=0, Sigma0=1."""
    return Problem(
        system=LinearSystem(A=[[0.0]], B=[[1.0]], V=[[1.0]], C=[[1.0]], W=[[1.0]]),
        belief=InitialBelief(mu0=[0.0], Sigma0=[[1.0]]),
        cost=CostSpec(Q=[[1.0]], R=[[1.0]], alpha=alpha),
    )


def random_problem(
    seed: int,
    *,
    output: bool = True,
    alpha: float | None = None,
    max_dim: int = 3,
) -> Problem:
    """Well-conditioned random problem with n, m, p <= max_dim and alpha in [-2, -0.1]."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, max_dim + 1))
    m = int(rng.integers(1, max_dim + 1))
    p = int(rng.integers(1, max_dim + 1))

    def spd(size: int, floor: float) -> np.ndarray:
        g = rng.normal(size=(size, size))
        return g @ g.T / size + floor * np.eye(size)

    A = rng.normal(size=(n, n)) / np.sqrt(n)
    B = rng.normal(size=(n, m))
    V = spd(n, 0.1)
    mu0 = rng.normal(size=n)
    covariance = spd(n, 0.1)
    system = (
        LinearSystem(A=A, B=B, V=V, C=rng.normal(size=(p, n)), W=spd(p, 0.2))
        if output
        else LinearSystem.full_state(A, B, V)
    )
    return Problem(
        system=system,
        belief=InitialBelief.from_covariance(mu0, covariance),
        cost=CostSpec(
            Q=spd(n, 0.1),
            R=spd(m, 0.2),
            alpha=float(rng.uniform(-2.0, -0.1)) if alpha is None else alpha,
        ),
    )


@pytest.fixture
def golden() -> Problem:
    return golden_problem()


@pytest.fixture
def random_problem_factory() -> RandomProblemFactory:
    return random_problem


@pytest.fixture
def golden_factory() -> Callable[..., Problem]:
    return golden_problem
