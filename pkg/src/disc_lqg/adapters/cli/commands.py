"""Normalized CLI command DTOs."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from typing import Literal

RunMode = Literal["design", "verify", "simulate"]

DESIGN_COMMAND = "design"
VERIFY_COMMAND = "verify"
SIMULATE_COMMAND = "simulate"


@dataclass(frozen=True, slots=True)
class AnalysisRunCommand:
    mode: RunMode
    input_path: str
    output_path: str | None
    seed: int | None = None
    dt: float | None = None
    horizon: float | None = None
    trajectories: int | None = None
    workers: int | None = None
    compare_nondiscounted: bool = False
    stationarity_step: float | None = None


def to_analysis_run_command(args: argparse.Namespace) -> AnalysisRunCommand:
    mode = args.mode
    if mode not in (DESIGN_COMMAND, VERIFY_COMMAND, SIMULATE_COMMAND):
        raise ValueError(f"unknown mode: {mode}")
    return AnalysisRunCommand(
        mode=mode,
        input_path=args.input,
        output_path=args.output,
        seed=getattr(args, "seed", None),
        dt=getattr(args, "dt", None),
        horizon=getattr(args, "horizon", None),
        trajectories=getattr(args, "trajectories", None),
        workers=getattr(args, "workers", None),
        compare_nondiscounted=bool(getattr(args, "compare_nondiscounted", False)),
        stationarity_step=getattr(args, "stationarity_step", None),
    )
