"""JSON-backed loader for problem files."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, cast

import numpy as np

from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.model.problem import Problem, SimBlock
from disc_lqg.usecases.cli.ports.problem_loader import ProblemLoaderPort

SUPPORTED_SCHEMA_VERSIONS = (1,)
MATRIX_KEYS = ("A", "B", "C", "D", "V", "W", "Sigma0", "Q", "R")
KNOWN_KEYS = frozenset((*MATRIX_KEYS, "mu0", "alpha", "sim", "schema_version"))
SIM_KEYS = frozenset(("dt", "horizon", "trajectories", "seed"))


@dataclass(slots=True)
class ProblemJsonStore(ProblemLoaderPort):
    """Read one problem description from a flat JSON object.

    Matrices are row-major nested arrays; a bare number is a 1x1 matrix. C, D and W are
    omitted for full-state problems. mu0 and Sigma0 default to zero, alpha to 0.
    """

    cwd: Path = field(default_factory=Path.cwd)

    def load(self, path: str) -> Problem:
        target = Path(path)
        if not target.is_absolute():
            target = self.cwd / target
        try:
            payload = json.loads(target.read_text(encoding="utf-8"))
        except OSError as exc:
            raise RuntimeError(f"failed to read problem file: {target}") from exc
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid problem json: {target}: {exc.msg} (line {exc.lineno})") from exc
        return parse_problem(payload)


def parse_problem(payload: Any) -> Problem:
    if not isinstance(payload, dict):
        raise ValueError("problem payload must be object")
    payload_dict = cast(dict[str, object], payload)

    unknown = sorted(set(payload_dict) - KNOWN_KEYS)
    if unknown:
        raise ValueError(f"unknown problem key(s): {', '.join(unknown)}")
    raw_schema = payload_dict.get("schema_version", 1)
    if type(raw_schema) is not int or raw_schema not in SUPPORTED_SCHEMA_VERSIONS:
        raise ValueError(f"unsupported problem schema_version: {raw_schema!r}")
    for key in ("A", "B", "V", "Q", "R"):
        if key not in payload_dict:
            raise ValueError(f"problem is missing required key {key}")

    A = _parse_matrix(payload_dict, "A")
    n = A.shape[0]
    has_output = "C" in payload_dict or "W" in payload_dict
    if has_output and ("C" not in payload_dict or "W" not in payload_dict):
        raise ValueError("problem must give C and W together")
    if "D" in payload_dict and not has_output:
        raise ValueError("problem D requires C and W")

    system = LinearSystem(
        A=A,
        B=_parse_matrix(payload_dict, "B"),
        V=_parse_matrix(payload_dict, "V"),
        C=_parse_matrix(payload_dict, "C") if has_output else None,
        D=_parse_matrix(payload_dict, "D") if "D" in payload_dict else None,
        W=_parse_matrix(payload_dict, "W") if has_output else None,
    )
    mu0 = _parse_vector(payload_dict, "mu0") if "mu0" in payload_dict else np.zeros(n)
    sigma0 = _parse_matrix(payload_dict, "Sigma0") if "Sigma0" in payload_dict else np.zeros((n, n))
    belief = InitialBelief(mu0=mu0, Sigma0=sigma0)
    cost = CostSpec(
        Q=_parse_matrix(payload_dict, "Q"),
        R=_parse_matrix(payload_dict, "R"),
        alpha=_parse_float(payload_dict.get("alpha", 0.0), "alpha"),
    )
    sim = _parse_sim(payload_dict["sim"]) if "sim" in payload_dict else None
    return Problem(system=system, belief=belief, cost=cost, sim=sim)


def _parse_sim(raw: object) -> SimBlock:
    if not isinstance(raw, dict):
        raise ValueError("problem sim must be object")
    block = cast(dict[str, object], raw)
    unknown = sorted(set(block) - SIM_KEYS)
    if unknown:
        raise ValueError(f"unknown sim key(s): {', '.join(unknown)}")
    dt = block.get("dt")
    horizon = block.get("horizon")
    trajectories = block.get("trajectories")
    seed = block.get("seed")
    if trajectories is not None and (type(trajectories) is not int or trajectories <= 0):
        raise ValueError("sim trajectories must be positive int")
    if seed is not None and (type(seed) is not int or seed < 0):
        raise ValueError("sim seed must be non-negative int")
    return SimBlock(
        dt=None if dt is None else _parse_float(dt, "sim.dt"),
        horizon=None if horizon is None else _parse_float(horizon, "sim.horizon"),
        trajectories=trajectories,
        seed=seed,
    )


def _parse_matrix(payload: Mapping[str, object], key: str) -> np.ndarray:
    raw = payload.get(key)
    _require_numeric(raw, key)
    try:
        matrix = np.array(raw, dtype=float)
    except ValueError as exc:
        raise ValueError(f"problem {key} must be a rectangular numeric array") from exc
    if matrix.ndim == 0:
        return matrix.reshape(1, 1)
    if matrix.ndim == 1:
        # flat lists are ambiguous between a row and a column
        raise ValueError(f"problem {key} must be a nested array of rows")
    if matrix.ndim != 2:
        raise ValueError(f"problem {key} must be 2-D, got ndim={matrix.ndim}")
    return matrix


def _parse_vector(payload: Mapping[str, object], key: str) -> np.ndarray:
    raw = payload.get(key)
    _require_numeric(raw, key)
    try:
        vector = np.array(raw, dtype=float)
    except ValueError as exc:
        raise ValueError(f"problem {key} must be a numeric array") from exc
    if vector.ndim == 2 and 1 in vector.shape:
        vector = vector.reshape(-1)
    if vector.ndim == 0:
        vector = vector.reshape(1)
    if vector.ndim != 1:
        raise ValueError(f"problem {key} must be a vector")
    return vector


def _require_numeric(raw: object, key: str) -> None:
    if isinstance(raw, bool):
        raise ValueError(f"problem {key} must be numeric")
    if isinstance(raw, (int, float)):
        return
    if not isinstance(raw, list):
        raise ValueError(f"problem {key} must be numeric")
    for item in raw:
        _require_numeric(item, key)


def _parse_float(raw: object, key: str) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise ValueError(f"problem {key} must be number")
    value = float(raw)
    if not math.isfinite(value):
        raise ValueError(f"problem {key} must be finite")
    return value
