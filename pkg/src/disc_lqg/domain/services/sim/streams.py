"""Counter-based random streams, one per trajectory."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from disc_lqg.domain.services.matrix_rules import FloatMatrix, symmetrize

CHOLESKY_JITTER = 1e-12


def trajectory_generator(seed: int, index: int) -> np.random.Generator:
    """Philox stream keyed by (seed, trajectory index); independent of batching and threads."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    return np.random.Generator(np.random.Philox(sequence))


def intensity_factor(intensity: ArrayLike) -> FloatMatrix:
    """Symmetric square root L with L L^T = intensity; zero intensities give an exact zero."""
    matrix = symmetrize(intensity)
    if matrix.size == 0 or not np.any(matrix):
        return np.zeros_like(matrix)
    eigenvalues, vectors = np.linalg.eigh(matrix)
    return vectors * np.sqrt(np.clip(eigenvalues, 0.0, None))


def covariance_factor(covariance: ArrayLike) -> FloatMatrix:
    """Cholesky factor, retried with diagonal jitter for semidefinite covariances."""
    matrix = symmetrize(covariance)
    if matrix.size == 0 or not np.any(matrix):
        return np.zeros_like(matrix)
    try:
        return np.linalg.cholesky(matrix)
    except np.linalg.LinAlgError:
        jitter = CHOLESKY_JITTER * max(1.0, float(np.max(np.abs(np.diag(matrix)))))
        try:
            return np.linalg.cholesky(matrix + jitter * np.eye(matrix.shape[0]))
        except np.linalg.LinAlgError:
            return intensity_factor(matrix)
