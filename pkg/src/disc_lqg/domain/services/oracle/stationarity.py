"""Numerical optimality probes: central-difference gradients and grid scans of the joint cost."""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numpy.typing import ArrayLike

from disc_lqg.domain.errors import NotDiscountedStable
from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.gain_pair import GainPair
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.model.verification import PerturbationScan, StationarityReport
from disc_lqg.domain.services.matrix_rules import FloatMatrix, frobenius
from disc_lqg.domain.services.oracle.joint_cost import joint_cost

DEFAULT_RELATIVE_STEP = 1e-5


def default_step(gain: ArrayLike) -> float:
    """h = 1e-5 * max(1, ||gain||_F)."""
    return DEFAULT_RELATIVE_STEP * max(1.0, frobenius(gain))


def verify_stationarity(
    system: LinearSystem,
    belief: InitialBelief,
    cost: CostSpec,
    gains: GainPair,
    *,
    step: float | None = None,
    workers: int = 1,
) -> StationarityReport:
    """Central differences of the discounted joint cost around `gains`.

    `step` overrides the per-gain default step for both F and K.
    """
    F = gains.require_f()
    K = gains.require_k()
    step_f = default_step(F) if step is None else step
    step_k = default_step(K) if step is None else step
    if step_f <= 0.0 or step_k <= 0.0:
        raise ValueError("stationarity step must be > 0")

    def total(candidate: GainPair) -> float:
        return joint_cost(system, belief, cost, candidate).total

    probes: list[GainPair] = []
    for index in np.ndindex(F.shape):
        probes.append(gains.replace(F=_nudged(F, index, step_f)))
        probes.append(gains.replace(F=_nudged(F, index, -step_f)))
    for index in np.ndindex(K.shape):
        probes.append(gains.replace(K=_nudged(K, index, step_k)))
        probes.append(gains.replace(K=_nudged(K, index, -step_k)))

    values = _evaluate(total, probes, workers)
    differences = values[0::2] - values[1::2]
    grad_f = differences[: F.size].reshape(F.shape) / (2.0 * step_f)
    grad_k = differences[F.size :].reshape(K.shape) / (2.0 * step_k)
    return StationarityReport(
        cost=total(gains),
        grad_f=grad_f,
        grad_k=grad_k,
        step_f=step_f,
        step_k=step_k,
    )


def perturbation_scan(
    system: LinearSystem,
    belief: InitialBelief,
    cost: CostSpec,
    gains: GainPair,
    *,
    radius: float = 0.2,
    step: float = 0.05,
    directions: tuple[ArrayLike, ArrayLike] | None = None,
    workers: int = 1,
) -> PerturbationScan:
    """Joint cost at F + s D_F, K + t D_K for s, t on a symmetric grid of offsets.

    Directions default to all-ones matrices, which for scalar problems scans the (F, K) plane.
    """
    if radius <= 0.0 or step <= 0.0:
        raise ValueError("radius and step must be > 0")
    F = gains.require_f()
    K = gains.require_k()
    if directions is None:
        direction_f, direction_k = np.ones_like(F), np.ones_like(K)
    else:
        direction_f = np.asarray(directions[0], dtype=float).reshape(F.shape)
        direction_k = np.asarray(directions[1], dtype=float).reshape(K.shape)

    half = int(round(radius / step))
    offsets = tuple(float(i * step) for i in range(-half, half + 1))

    def total(candidate: GainPair) -> float:
        try:
            return joint_cost(system, belief, cost, candidate).total
        except NotDiscountedStable:
            return math.inf

    candidates = [
        gains.replace(F=F + s * direction_f, K=K + t * direction_k)
        for s in offsets
        for t in offsets
    ]
    values = _evaluate(total, candidates, workers).reshape(len(offsets), len(offsets))
    flat_min = int(np.argmin(values))
    argmin = (flat_min // len(offsets), flat_min % len(offsets))
    return PerturbationScan(
        offsets=offsets,
        costs=tuple(tuple(float(v) for v in row) for row in values),
        center_cost=float(values[half, half]),
        min_cost=float(values[argmin]),
        argmin=argmin,
    )


def _nudged(matrix: FloatMatrix, index: tuple[int, ...], delta: float) -> FloatMatrix:
    nudged = np.array(matrix, dtype=float)
    nudged[index] += delta
    return nudged


def _evaluate(
    fn: Callable[[GainPair], float],
    candidates: Sequence[GainPair],
    workers: int,
) -> np.ndarray:
    if workers <= 1:
        return np.array([fn(candidate) for candidate in candidates], dtype=float)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return np.array(list(executor.map(fn, candidates)), dtype=float)
