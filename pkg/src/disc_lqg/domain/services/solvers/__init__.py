"""Matrix-equation kernels."""

from .lyapunov import solve_lyapunov, solve_sylvester
from .riccati import solve_care, solve_filter_care

__all__ = ["solve_care", "solve_filter_care", "solve_lyapunov", "solve_sylvester"]
