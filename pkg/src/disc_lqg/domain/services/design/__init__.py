"""Gain synthesis and analytic cost formulas."""

from .closed_loop import closed_loop_eigenvalues, max_real_part
from .full_state import controller_gain, cost_full_state_discounted, lqr, lqr_discounted
from .observer import effective_filter_noise, kalman, observer_gain
from .output_feedback import (
    cost_output_feedback_discounted,
    cost_rate_output_feedback,
    lqg,
    lqg_discounted,
)

__all__ = [
    "closed_loop_eigenvalues",
    "controller_gain",
    "cost_full_state_discounted",
    "cost_output_feedback_discounted",
    "cost_rate_output_feedback",
    "effective_filter_noise",
    "kalman",
    "lqg",
    "lqg_discounted",
    "lqr",
    "lqr_discounted",
    "max_real_part",
    "observer_gain",
]
