"""Structural rules on the plant: shifting, PBH tests and invariant validation."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from disc_lqg.domain.errors import ProblemValidationError
from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.model.validation_report import ValidationReport
from disc_lqg.domain.services.matrix_rules import (
    HURWITZ_MARGIN,
    RANK_RTOL,
    FloatMatrix,
    is_pd,
    is_psd,
    is_symmetric,
)


def shifted_a(system: LinearSystem, alpha: float) -> FloatMatrix:
    """A + alpha I. For alpha == 0 the original A is returned unchanged."""
    if alpha == 0.0:
        return system.A
    return system.A + alpha * np.eye(system.n)


def is_stabilizable(A: ArrayLike, B: ArrayLike) -> bool:
    """PBH test: rank [A - lambda I, B] = n for every eigenvalue with Re(lambda) > -margin."""
    a = np.asarray(A, dtype=float)
    b = np.asarray(B, dtype=float)
    n = a.shape[0]
    if b.ndim != 2 or b.shape[0] != n:
        raise ValueError(f"B must have {n} rows")
    if n == 0:
        return True

    for eigenvalue in np.linalg.eigvals(a):
        # marginal modes count as unstable
        if eigenvalue.real <= -HURWITZ_MARGIN:
            continue
        pencil = np.hstack([a - eigenvalue * np.eye(n), b.astype(complex)])
        if _rank_deficient(pencil, n):
            return False
    return True


def is_detectable(A: ArrayLike, C: ArrayLike) -> bool:
    """Duality: (A, C) detectable iff (A^T, C^T) stabilizable."""
    a = np.asarray(A, dtype=float)
    c = np.asarray(C, dtype=float)
    return is_stabilizable(a.T, c.T)


def _rank_deficient(pencil: np.ndarray, n: int) -> bool:
    singular_values = np.linalg.svd(pencil, compute_uv=False)
    sigma_max = float(singular_values[0])
    if sigma_max == 0.0:
        return True
    sigma_min = float(singular_values[n - 1])
    return sigma_min / sigma_max < RANK_RTOL


def validate_problem(
    system: LinearSystem,
    belief: InitialBelief,
    cost: CostSpec,
) -> ValidationReport:
    """List every violated invariant; an empty report means the problem is valid."""
    issues: list[str] = []
    n = system.n
    m = system.m

    if system.A.shape[0] != system.A.shape[1]:
        issues.append(f"A must be square, got {system.A.shape[0]}x{system.A.shape[1]}")
        return ValidationReport(issues=tuple(issues))

    _check_shape(issues, "B", system.B, (n, m))
    _check_shape(issues, "V", system.V, (n, n))
    if system.has_output:
        C, D, W = system.output_matrices()
        p = C.shape[0]
        _check_shape(issues, "C", C, (p, n))
        _check_shape(issues, "D", D, (p, m))
        _check_shape(issues, "W", W, (p, p))
    if belief.mu0.shape != (n,):
        issues.append(f"mu0 must have length {n}, got {belief.mu0.shape[0]}")
    _check_shape(issues, "Sigma0", belief.Sigma0, (n, n))
    _check_shape(issues, "Q", cost.Q, (n, n))
    _check_shape(issues, "R", cost.R, (m, m))
    if issues:
        return ValidationReport(issues=tuple(issues))

    named: list[tuple[str, FloatMatrix]] = [
        ("A", system.A),
        ("B", system.B),
        ("V", system.V),
        ("mu0", belief.mu0.reshape(-1, 1)),
        ("Sigma0", belief.Sigma0),
        ("Q", cost.Q),
        ("R", cost.R),
    ]
    if system.has_output:
        C, D, W = system.output_matrices()
        named += [("C", C), ("D", D), ("W", W)]
    non_finite = [name for name, matrix in named if not np.all(np.isfinite(matrix))]
    if non_finite:
        issues.extend(f"{name} contains non-finite entries" for name in non_finite)
        return ValidationReport(issues=tuple(issues))

    _check_semidefinite(issues, "V", system.V)
    if system.has_output:
        _check_definite(issues, "W", system.output_matrices()[2])
    _check_semidefinite(issues, "Q", cost.Q)
    _check_definite(issues, "R", cost.R)
    if not is_symmetric(belief.Sigma0):
        issues.append("Sigma0 not symmetric")
    elif not is_psd(belief.covariance):
        issues.append("Σ₀ − μ₀μ₀ᵀ not PSD")
    return ValidationReport(issues=tuple(issues))


def ensure_valid(system: LinearSystem, belief: InitialBelief, cost: CostSpec) -> None:
    report = validate_problem(system, belief, cost)
    if not report.is_valid:
        raise ProblemValidationError(message="; ".join(report.issues), issues=report.issues)


def _check_shape(
    issues: list[str],
    name: str,
    matrix: FloatMatrix,
    expected: tuple[int, int],
) -> None:
    if matrix.shape != expected:
        issues.append(
            f"{name} must be {expected[0]}x{expected[1]}, got {matrix.shape[0]}x{matrix.shape[1]}"
        )


def _check_semidefinite(issues: list[str], name: str, matrix: FloatMatrix) -> None:
    if not is_symmetric(matrix):
        issues.append(f"{name} not symmetric")
    elif not is_psd(matrix):
        issues.append(f"{name} not positive semidefinite")


def _check_definite(issues: list[str], name: str, matrix: FloatMatrix) -> None:
    if not is_symmetric(matrix):
        issues.append(f"{name} not symmetric")
    elif not is_pd(matrix):
        issues.append(f"{name} not positive definite")
