"""Numerical tolerance rules shared by model validation and solvers."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

SYMMETRY_RTOL = 1e-10
DEFINITENESS_RTOL = 1e-10
RANK_RTOL = 1e-10
HURWITZ_MARGIN = 1e-10
PSD_SOLUTION_RTOL = 1e-9

FloatMatrix = NDArray[np.float64]


def as_matrix(value: ArrayLike, *, name: str = "matrix") -> FloatMatrix:
    """Return a read-only 2-D float64 copy of `value`."""
    array = np.array(value, dtype=float, copy=True)
    if array.ndim == 0:
        array = array.reshape(1, 1)
    if array.ndim != 2:
        raise ValueError(f"{name} must be a 2-D matrix, got ndim={array.ndim}")
    array.setflags(write=False)
    return array


def as_vector(value: ArrayLike, *, name: str = "vector") -> NDArray[np.float64]:
    """Return a read-only 1-D float64 copy of `value`."""
    array = np.array(value, dtype=float, copy=True)
    if array.ndim == 0:
        array = array.reshape(1)
    if array.ndim == 2 and 1 in array.shape:
        array = array.reshape(-1)
    if array.ndim != 1:
        raise ValueError(f"{name} must be a 1-D vector, got ndim={array.ndim}")
    array.setflags(write=False)
    return array


def frobenius(matrix: ArrayLike) -> float:
    return float(np.linalg.norm(np.asarray(matrix, dtype=float), ord="fro"))


def symmetrize(matrix: ArrayLike) -> FloatMatrix:
    array = np.asarray(matrix, dtype=float)
    return 0.5 * (array + array.T)


def is_square(matrix: ArrayLike) -> bool:
    shape = np.shape(matrix)
    return len(shape) == 2 and shape[0] == shape[1]


def is_symmetric(matrix: ArrayLike, *, rtol: float = SYMMETRY_RTOL) -> bool:
    """Accept `matrix` as symmetric when ||M - M^T||_F <= rtol * max(1, ||M||_F)."""
    array = np.asarray(matrix, dtype=float)
    if not is_square(array):
        return False
    return frobenius(array - array.T) <= rtol * max(1.0, frobenius(array))


def min_symmetric_eigenvalue(matrix: ArrayLike) -> float:
    sym = symmetrize(matrix)
    if sym.size == 0:
        return 0.0
    return float(np.linalg.eigvalsh(sym)[0])


def is_psd(matrix: ArrayLike, *, rtol: float = DEFINITENESS_RTOL) -> bool:
    """Positive semidefinite test on the symmetrized matrix with a relative floor."""
    array = np.asarray(matrix, dtype=float)
    if not is_square(array):
        return False
    scale = max(1.0, frobenius(array))
    return min_symmetric_eigenvalue(array) >= -rtol * scale


def is_pd(matrix: ArrayLike, *, rtol: float = DEFINITENESS_RTOL) -> bool:
    """Positive definite test: smallest eigenvalue strictly above the relative floor."""
    array = np.asarray(matrix, dtype=float)
    if not is_square(array) or array.size == 0:
        return False
    scale = max(1.0, frobenius(array))
    return min_symmetric_eigenvalue(array) > rtol * scale


def spectral_abscissa(matrix: ArrayLike) -> float:
    """Largest real part over the eigenvalues of `matrix`."""
    array = np.asarray(matrix, dtype=float)
    if array.size == 0:
        return -np.inf
    return float(np.max(np.linalg.eigvals(array).real))


def is_hurwitz(matrix: ArrayLike, *, margin: float = HURWITZ_MARGIN) -> bool:
    return spectral_abscissa(matrix) < -margin


def relative_gap(a: float, b: float) -> float:
    """|a - b| relative to max(1, |a|, |b|)."""
    return abs(a - b) / max(1.0, abs(a), abs(b))


def is_zero(matrix: ArrayLike) -> bool:
    array = np.asarray(matrix, dtype=float)
    return bool(array.size == 0 or not np.any(array))
