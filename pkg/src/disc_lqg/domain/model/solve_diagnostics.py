"""Quality report attached to every matrix-equation solve."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class SolveDiagnostics:
    """Residual of one Lyapunov/Riccati solve.

    relative_residual = residual_norm / max(1, scale of the equation data), where the
    scale includes the solution terms. data_relative_residual divides by max(1, |constant
    term|_F) only, which exposes residuals hidden by a large solution.
    spectral_abscissa is the largest real part of the closed loop produced by the
    solution (None for Lyapunov solves).
    """

    equation: str
    residual_norm: float
    relative_residual: float
    iterations: int = 0
    spectral_abscissa: float | None = None
    data_relative_residual: float | None = None

    def __post_init__(self) -> None:
        if self.residual_norm < 0.0 or self.relative_residual < 0.0:
            raise ValueError("residual norms must be >= 0")
        if self.data_relative_residual is not None and self.data_relative_residual < 0.0:
            raise ValueError("residual norms must be >= 0")
        if self.iterations < 0:
            raise ValueError("iterations must be >= 0")

    @property
    def stability_margin(self) -> float | None:
        if self.spectral_abscissa is None:
            return None
        return -self.spectral_abscissa
