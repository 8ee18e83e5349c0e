"""Continuous-time Lyapunov and Sylvester kernels.

Solves Acl^T X + X Acl + Qrhs = 0 for Hurwitz Acl.
"""

from __future__ import annotations

from typing import Literal

import numpy as np
from numpy.typing import ArrayLike
from scipy import linalg

from disc_lqg.domain.errors import NotHurwitz
from disc_lqg.domain.model.solve_diagnostics import SolveDiagnostics
from disc_lqg.domain.services.matrix_rules import (
    HURWITZ_MARGIN,
    FloatMatrix,
    frobenius,
    spectral_abscissa,
    symmetrize,
)

LyapunovMethod = Literal["auto", "vectorized", "schur"]

VECTORIZED_MAX_N = 64


def solve_lyapunov(
    acl: ArrayLike,
    qrhs: ArrayLike,
    *,
    method: LyapunovMethod = "auto",
) -> tuple[FloatMatrix, SolveDiagnostics]:
    """Return the symmetric solution X of Acl^T X + X Acl + Qrhs = 0 with diagnostics."""
    a = np.asarray(acl, dtype=float)
    q = symmetrize(qrhs)
    n = a.shape[0]
    if a.shape != (n, n) or q.shape != (n, n):
        raise ValueError("Acl and Qrhs must be square matrices of equal size")

    abscissa = spectral_abscissa(a)
    if abscissa >= -HURWITZ_MARGIN:
        raise NotHurwitz(f"Lyapunov matrix is not Hurwitz (spectral abscissa {abscissa:.3e})")

    if method == "auto":
        method = "vectorized" if n <= VECTORIZED_MAX_N else "schur"
    if method == "vectorized":
        x = _solve_vectorized(a, q)
    elif method == "schur":
        # scipy solves A X + X A^H = Q (Bartels-Stewart)
        x = linalg.solve_continuous_lyapunov(a.T, -q)
    else:
        raise ValueError(f"unknown Lyapunov method: {method}")

    x = symmetrize(x)
    return x, lyapunov_diagnostics(a, q, x)


def _solve_vectorized(a: FloatMatrix, q: FloatMatrix) -> FloatMatrix:
    """Dense n^2 x n^2 solve of the column-major vectorized equation."""
    n = a.shape[0]
    eye = np.eye(n)
    operator = np.kron(eye, a.T) + np.kron(a.T, eye)
    vec_x = np.linalg.solve(operator, -q.reshape(-1, order="F"))
    return vec_x.reshape((n, n), order="F")


def lyapunov_residual(acl: ArrayLike, qrhs: ArrayLike, x: ArrayLike) -> FloatMatrix:
    a = np.asarray(acl, dtype=float)
    xm = np.asarray(x, dtype=float)
    return a.T @ xm + xm @ a + np.asarray(qrhs, dtype=float)


def lyapunov_diagnostics(acl: FloatMatrix, qrhs: FloatMatrix, x: FloatMatrix) -> SolveDiagnostics:
    residual = frobenius(lyapunov_residual(acl, qrhs, x))
    scale = max(1.0, frobenius(qrhs), frobenius(acl.T @ x) + frobenius(x @ acl))
    return SolveDiagnostics(
        equation="lyapunov",
        residual_norm=residual,
        relative_residual=residual / scale,
        data_relative_residual=residual / max(1.0, frobenius(qrhs)),
    )


def solve_sylvester(a: ArrayLike, b: ArrayLike, rhs: ArrayLike) -> FloatMatrix:
    """Solve A X + X B = rhs."""
    return linalg.solve_sylvester(
        np.asarray(a, dtype=float),
        np.asarray(b, dtype=float),
        np.asarray(rhs, dtype=float),
    )
