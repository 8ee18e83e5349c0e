"""Monte Carlo validation of analytic costs."""

from .monte_carlo import compare_designs, default_horizon, default_sim_config, simulate, summarize
from .streams import trajectory_generator

__all__ = [
    "compare_designs",
    "default_horizon",
    "default_sim_config",
    "simulate",
    "summarize",
    "trajectory_generator",
]
