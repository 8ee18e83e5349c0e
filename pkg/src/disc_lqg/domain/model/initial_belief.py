"""Gaussian description of the unknown initial state."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from disc_lqg.domain.services.matrix_rules import FloatMatrix, as_matrix, as_vector, symmetrize


@dataclass(frozen=True, slots=True, eq=False)
class InitialBelief:
    """Mean mu0 = E[x0] and second moment Sigma0 = E[x0 x0^T] (not the covariance)."""

    mu0: NDArray[np.float64]
    Sigma0: FloatMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu0", as_vector(self.mu0, name="mu0"))
        object.__setattr__(self, "Sigma0", as_matrix(self.Sigma0, name="Sigma0"))

    @classmethod
    def deterministic(cls, mu0: ArrayLike) -> InitialBelief:
        """Belief for a known initial state: Sigma0 = mu0 mu0^T."""
        mean = np.asarray(mu0, dtype=float).reshape(-1)
        return cls(mu0=mean, Sigma0=np.outer(mean, mean))

    @classmethod
    def from_covariance(cls, mu0: ArrayLike, covariance: ArrayLike) -> InitialBelief:
        mean = np.asarray(mu0, dtype=float).reshape(-1)
        return cls(mu0=mean, Sigma0=np.asarray(covariance, dtype=float) + np.outer(mean, mean))

    @property
    def n(self) -> int:
        return int(self.mu0.shape[0])

    @property
    def covariance(self) -> FloatMatrix:
        """Sigma0 - mu0 mu0^T, symmetrized."""
        return symmetrize(self.Sigma0 - np.outer(self.mu0, self.mu0))
