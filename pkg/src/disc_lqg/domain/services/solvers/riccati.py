"""Continuous-time algebraic Riccati equations, controller and filter forms.

Controller form:  A^T X + X A + Q - X B R^-1 B^T X = 0
Filter form:      A E + E A^T + V - E C^T W^-1 C E = 0

Both return the stabilizing solution: Hamiltonian real Schur decomposition ordered on
the stable subspace, then Newton-Kleinman refinement.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike
from scipy import linalg

from disc_lqg.domain.errors import NoStabilizingSolution, NotDetectable, NotHurwitz, NotStabilizable
from disc_lqg.domain.model.solve_diagnostics import SolveDiagnostics
from disc_lqg.domain.services.matrix_rules import (
    HURWITZ_MARGIN,
    PSD_SOLUTION_RTOL,
    FloatMatrix,
    frobenius,
    min_symmetric_eigenvalue,
    spectral_abscissa,
    symmetrize,
)
from disc_lqg.domain.services.solvers.lyapunov import solve_lyapunov
from disc_lqg.domain.services.system_rules import is_detectable, is_stabilizable

MAX_NEWTON_STEPS = 5


def solve_care(
    ain: ArrayLike,
    b: ArrayLike,
    q: ArrayLike,
    r: ArrayLike,
) -> tuple[FloatMatrix, SolveDiagnostics]:
    """Stabilizing solution X of the controller Riccati equation for (Ain, B, Q, R)."""
    a = np.asarray(ain, dtype=float)
    bm = np.asarray(b, dtype=float)
    if not is_stabilizable(a, bm):
        raise NotStabilizable("(A, B) is not stabilizable")
    return _solve_stabilizing(a, bm, symmetrize(q), symmetrize(r), equation="care")


def solve_filter_care(
    ain: ArrayLike,
    c: ArrayLike,
    vin: ArrayLike,
    w: ArrayLike,
) -> tuple[FloatMatrix, SolveDiagnostics]:
    """Stabilizing solution E of the filter Riccati equation for (Ain, C, Vin, W)."""
    a = np.asarray(ain, dtype=float)
    cm = np.asarray(c, dtype=float)
    if not is_detectable(a, cm):
        raise NotDetectable("(A, C) is not detectable")
    # the filter equation is the controller equation of the dual pair (A^T, C^T)
    return _solve_stabilizing(a.T, cm.T, symmetrize(vin), symmetrize(w), equation="filter_care")


def care_residual(a: FloatMatrix, g: FloatMatrix, q: FloatMatrix, x: FloatMatrix) -> FloatMatrix:
    """A^T X + X A + Q - X G X with G = B R^-1 B^T."""
    return a.T @ x + x @ a + q - x @ g @ x


def _solve_stabilizing(
    a: FloatMatrix,
    b: FloatMatrix,
    q: FloatMatrix,
    r: FloatMatrix,
    *,
    equation: str,
) -> tuple[FloatMatrix, SolveDiagnostics]:
    try:
        r_inv_bt = np.linalg.solve(r, b.T)
    except np.linalg.LinAlgError as exc:
        raise NoStabilizingSolution(f"{equation}: weight matrix is singular") from exc
    g = symmetrize(b @ r_inv_bt)

    x = _hamiltonian_solution(a, g, q, equation=equation)
    residual = frobenius(care_residual(a, g, q, x))

    iterations = 0
    for _ in range(MAX_NEWTON_STEPS):
        gain = r_inv_bt @ x
        try:
            candidate, _ = solve_lyapunov(a - b @ gain, q + gain.T @ r @ gain)
        except NotHurwitz:
            break
        candidate_residual = frobenius(care_residual(a, g, q, candidate))
        if candidate_residual >= residual:
            break
        x, residual = candidate, candidate_residual
        iterations += 1

    abscissa = spectral_abscissa(a - g @ x)
    if abscissa >= -HURWITZ_MARGIN:
        raise NoStabilizingSolution(
            f"{equation}: closed loop not Hurwitz after solve (spectral abscissa {abscissa:.3e})"
        )
    x_norm = frobenius(x)
    if min_symmetric_eigenvalue(x) < -PSD_SOLUTION_RTOL * max(1.0, x_norm):
        raise NoStabilizingSolution(f"{equation}: solution is not positive semidefinite")

    scale = max(1.0, frobenius(q), frobenius(a.T @ x) + frobenius(x @ a), frobenius(x @ g @ x))
    diagnostics = SolveDiagnostics(
        equation=equation,
        residual_norm=residual,
        relative_residual=residual / scale,
        iterations=iterations,
        spectral_abscissa=abscissa,
        data_relative_residual=residual / max(1.0, frobenius(q)),
    )
    return x, diagnostics


def _hamiltonian_solution(
    a: FloatMatrix,
    g: FloatMatrix,
    q: FloatMatrix,
    *,
    equation: str,
) -> FloatMatrix:
    n = a.shape[0]
    hamiltonian = np.block([[a, -g], [-q, -a.T]])
    _, vectors, stable_dim = linalg.schur(hamiltonian, output="real", sort="lhp")
    if stable_dim != n:
        raise NoStabilizingSolution(
            f"{equation}: Hamiltonian has {stable_dim} stable eigenvalues, expected {n}"
        )
    u11 = vectors[:n, :n]
    u21 = vectors[n:, :n]
    try:
        x = linalg.solve(u11.T, u21.T).T
    except linalg.LinAlgError as exc:
        raise NoStabilizingSolution(f"{equation}: stable subspace is not a graph") from exc
    return symmetrize(x)
