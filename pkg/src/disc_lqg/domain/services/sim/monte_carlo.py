"""Euler-Maruyama Monte Carlo of the closed loop: plant, observer and u = -F x_hat."""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass

import numpy as np

from disc_lqg.domain.errors import NonFiniteState
from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.gain_pair import GainPair
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.model.simulation import PairedComparison, SimConfig, SimResult
from disc_lqg.domain.services.matrix_rules import FloatMatrix
from disc_lqg.domain.services.sim.streams import (
    covariance_factor,
    intensity_factor,
    trajectory_generator,
)

NOISE_CHUNK_STEPS = 256
DEFAULT_DT = 1e-3
DEFAULT_TRAJECTORIES = 10_000
DEFAULT_HORIZON = 30.0
MAX_DEFAULT_HORIZON = 100.0

ProgressCallback = Callable[[int, int], None]


def default_sim_config(
    cost: CostSpec,
    *,
    dt: float = DEFAULT_DT,
    trajectories: int = DEFAULT_TRAJECTORIES,
    seed: int = 0,
    max_horizon: float = MAX_DEFAULT_HORIZON,
    batch_size: int = 2048,
    workers: int = 1,
) -> SimConfig:
    """Horizon 30 / |alpha| (capped) for discounted costs, so exp(2 alpha T) <= exp(-60)."""
    return SimConfig(
        dt=dt,
        horizon=default_horizon(cost.alpha, max_horizon=max_horizon),
        trajectories=trajectories,
        seed=seed,
        batch_size=batch_size,
        workers=workers,
    )


def default_horizon(alpha: float, *, max_horizon: float = MAX_DEFAULT_HORIZON) -> float:
    if alpha < 0.0:
        return min(DEFAULT_HORIZON / abs(alpha), max_horizon)
    return DEFAULT_HORIZON


def simulate(
    system: LinearSystem,
    belief: InitialBelief,
    cost: CostSpec,
    gains: GainPair,
    config: SimConfig,
    *,
    progress: ProgressCallback | None = None,
) -> SimResult:
    """Sample the discounted cost over [0, horizon].

    x0 ~ N(mu0, Sigma0 - mu0 mu0^T), x_hat0 = mu0 unless overridden. Process noise drives
    only the plant; measurement noise enters only through the observer innovation. Without
    an observer gain the law is u = -F x.
    """
    costs = _run(system, belief, cost, (gains,), config, progress)
    return summarize(costs[0])


def compare_designs(
    system: LinearSystem,
    belief: InitialBelief,
    cost: CostSpec,
    gains_a: GainPair,
    gains_b: GainPair,
    config: SimConfig,
    *,
    progress: ProgressCallback | None = None,
) -> PairedComparison:
    """Simulate two closed loops on identical noise realizations; difference is A - B."""
    costs = _run(system, belief, cost, (gains_a, gains_b), config, progress)
    differences = costs[0] - costs[1]
    paired = summarize(differences)
    return PairedComparison(
        mean_difference=paired.mean_cost,
        paired_std_error=paired.std_error,
        result_a=summarize(costs[0]),
        result_b=summarize(costs[1]),
        per_trajectory_differences=paired.per_trajectory_costs,
    )


def summarize(samples: np.ndarray) -> SimResult:
    count = samples.shape[0]
    std_error = float(np.std(samples, ddof=1) / math.sqrt(count)) if count > 1 else 0.0
    return SimResult(
        mean_cost=float(np.mean(samples)),
        std_error=std_error,
        per_trajectory_costs=tuple(float(value) for value in samples),
    )


@dataclass(frozen=True, slots=True, eq=False)
class _Plan:
    """Everything a batch needs, precomputed once per run."""

    a_t: FloatMatrix
    b_t: FloatMatrix
    c_t: FloatMatrix | None
    d_t: FloatMatrix | None
    q: FloatMatrix
    r: FloatMatrix
    process_factor_t: FloatMatrix
    measurement_factor_t: FloatMatrix | None
    initial_factor_t: FloatMatrix
    mu0: np.ndarray
    x_hat0: np.ndarray
    alpha: float
    dt: float
    steps: int
    seed: int
    designs: tuple[GainPair, ...]

    @property
    def n(self) -> int:
        return int(self.a_t.shape[0])

    @property
    def p(self) -> int:
        return 0 if self.c_t is None else int(self.c_t.shape[1])


def _run(
    system: LinearSystem,
    belief: InitialBelief,
    cost: CostSpec,
    designs: Sequence[GainPair],
    config: SimConfig,
    progress: ProgressCallback | None,
) -> np.ndarray:
    plan = _make_plan(system, belief, cost, designs, config)
    total = config.trajectories
    out = np.empty((len(designs), total))
    batches = [
        (start, min(start + config.batch_size, total))
        for start in range(0, total, config.batch_size)
    ]

    if config.workers <= 1 or len(batches) == 1:
        for start, stop in batches:
            out[:, start:stop] = _simulate_batch(plan, start, stop)
            if progress is not None:
                progress(stop, total)
        return out

    done = 0
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        futures = {
            executor.submit(_simulate_batch, plan, start, stop): (start, stop)
            for start, stop in batches
        }
        for future in as_completed(futures):
            start, stop = futures[future]
            out[:, start:stop] = future.result()
            done += stop - start
            if progress is not None:
                progress(done, total)
    return out


def _make_plan(
    system: LinearSystem,
    belief: InitialBelief,
    cost: CostSpec,
    designs: Sequence[GainPair],
    config: SimConfig,
) -> _Plan:
    for gains in designs:
        gains.check_dimensions(n=system.n, m=system.m, p=system.p)
        gains.require_f()
        if gains.K is not None and not system.has_output:
            raise ValueError("observer gain given for a system without measured output")

    x_hat0 = belief.mu0 if config.x_hat0_override is None else config.x_hat0_override
    if x_hat0.shape != (system.n,):
        raise ValueError(f"x_hat0 override must have length {system.n}")

    c_t = d_t = measurement_factor_t = None
    if system.has_output:
        C, D, W = system.output_matrices()
        c_t, d_t = C.T, D.T
        measurement_factor_t = intensity_factor(W).T

    return _Plan(
        a_t=system.A.T,
        b_t=system.B.T,
        c_t=c_t,
        d_t=d_t,
        q=cost.Q,
        r=cost.R,
        process_factor_t=intensity_factor(system.V).T,
        measurement_factor_t=measurement_factor_t,
        initial_factor_t=covariance_factor(belief.covariance).T,
        mu0=belief.mu0,
        x_hat0=np.asarray(x_hat0, dtype=float),
        alpha=cost.alpha,
        dt=config.dt,
        steps=config.steps,
        seed=config.seed,
        designs=tuple(designs),
    )


def _simulate_batch(plan: _Plan, start: int, stop: int) -> np.ndarray:
    """Discounted costs of trajectories [start, stop) for every design in the plan.

    Each trajectory draws its initial state first, then noise in fixed chunks of
    (steps, n + p) standard normals, so the stream layout depends only on its index.
    """
    n, p = plan.n, plan.p
    count = stop - start
    generators = [trajectory_generator(plan.seed, index) for index in range(start, stop)]

    x0 = plan.mu0 + np.stack([g.standard_normal(n) for g in generators]) @ plan.initial_factor_t
    states = [x0.copy() for _ in plan.designs]
    estimates = [np.tile(plan.x_hat0, (count, 1)) for _ in plan.designs]
    costs = np.zeros((len(plan.designs), count))
    sqrt_dt = math.sqrt(plan.dt)
    dt = plan.dt

    step = 0
    while step < plan.steps:
        chunk = min(NOISE_CHUNK_STEPS, plan.steps - step)
        noise = np.stack([g.standard_normal((chunk, n + p)) for g in generators], axis=1)
        for k in range(chunk):
            discount = math.exp(2.0 * plan.alpha * (step + k) * dt)
            dv = sqrt_dt * (noise[k, :, :n] @ plan.process_factor_t)
            dw = None
            if plan.measurement_factor_t is not None:
                dw = sqrt_dt * (noise[k, :, n:] @ plan.measurement_factor_t)

            for index, gains in enumerate(plan.designs):
                x = states[index]
                x_hat = estimates[index]
                u = -(x if gains.K is None else x_hat) @ gains.F.T
                running = np.einsum("bi,ij,bj->b", x, plan.q, x) + np.einsum(
                    "bi,ij,bj->b", u, plan.r, u
                )
                costs[index] += discount * running * dt

                if gains.K is not None:
                    measured = (x @ plan.c_t + u @ plan.d_t) * dt + dw
                    predicted = (x_hat @ plan.c_t + u @ plan.d_t) * dt
                    innovation = measured - predicted
                    drift = (x_hat @ plan.a_t + u @ plan.b_t) * dt
                    estimates[index] = x_hat + drift + innovation @ gains.K.T
                states[index] = x + (x @ plan.a_t + u @ plan.b_t) * dt + dv
        step += chunk
        _check_finite(states, estimates, costs, start)
    return costs


def _check_finite(
    states: list[np.ndarray],
    estimates: list[np.ndarray],
    costs: np.ndarray,
    start: int,
) -> None:
    finite = np.isfinite(costs).all(axis=0)
    for x, x_hat in zip(states, estimates, strict=True):
        finite &= np.isfinite(x).all(axis=1) & np.isfinite(x_hat).all(axis=1)
    if not finite.all():
        index = start + int(np.argmin(finite))
        raise NonFiniteState(
            message=f"trajectory {index} diverged (non-finite state or cost)",
            trajectory_index=index,
        )
