"""Joint closed-loop description used by the cost oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import NDArray

from disc_lqg.domain.services.matrix_rules import FloatMatrix

JointCoordinates = Literal["state_error", "estimate_error"]


@dataclass(frozen=True, slots=True, eq=False)
class JointSystem:
    """2n-dimensional linear SDE dz = Atilde z dt + dv_tilde with quadratic weight Qtilde.

    `state_error` coordinates stack (x, e); `estimate_error` stack (x_hat, e), e = x_hat - x.
    Sigma_tilde0 is the second moment E[z0 z0^T].
    """

    coordinates: JointCoordinates
    Atilde: FloatMatrix
    Vtilde: FloatMatrix
    Qtilde: FloatMatrix
    mu_tilde0: NDArray[np.float64]
    Sigma_tilde0: FloatMatrix

    @property
    def n(self) -> int:
        return int(self.Atilde.shape[0] // 2)

    def block(self, name: str, i: int, j: int) -> FloatMatrix:
        """Return the (i, j) n-by-n block (1-based) of one tilde matrix."""
        matrix = getattr(self, name)
        n = self.n
        return matrix[(i - 1) * n : i * n, (j - 1) * n : j * n]


@dataclass(frozen=True, slots=True)
class JointCostBreakdown:
    """Discounted joint cost with its block decomposition.

    `total` is the full 2n-system evaluation; `block_total` the blockwise one.
    """

    total: float
    J11: float
    J22: float
    X12_norm: float
    X11_norm: float
    block_total: float
    cross_term: float

    def __post_init__(self) -> None:
        if self.X12_norm < 0.0 or self.X11_norm < 0.0:
            raise ValueError("norms must be >= 0")
