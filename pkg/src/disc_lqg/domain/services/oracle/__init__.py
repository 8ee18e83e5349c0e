"""Independent evaluators of closed-loop cost for arbitrary gain pairs."""

from .horizon_cost import expected_cost_horizon
from .joint_cost import cost_rate_for_gain, joint_cost, joint_cost_rate
from .joint_dynamics import build_joint
from .stationarity import default_step, perturbation_scan, verify_stationarity

__all__ = [
    "build_joint",
    "cost_rate_for_gain",
    "default_step",
    "expected_cost_horizon",
    "joint_cost",
    "joint_cost_rate",
    "perturbation_scan",
    "verify_stationarity",
]
