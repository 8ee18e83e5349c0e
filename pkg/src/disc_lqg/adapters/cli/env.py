"""Environment helpers for CLI adapter startup."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Mapping

SIM_ENV_PREFIX = "DISC_LQG_"
SIM_ENV_KEYS = ("DT", "TRAJECTORIES", "SEED", "BATCH_SIZE", "WORKERS")


def load_env_from_dotenv(path: str = ".env") -> None:
    """Best-effort dotenv loader; variables already in the environment win."""
    dotenv = Path(path)
    if not dotenv.is_file():
        return

    try:
        lines = dotenv.read_text(encoding="utf-8-sig").splitlines()
    except OSError:
        return
    for raw_line in lines:
        line = raw_line.strip()
        if not line or line.startswith("#") or "=" not in line:
            continue
        key, value = (part.strip() for part in line.split("=", 1))
        if not key or key in os.environ:
            continue
        if len(value) >= 2 and value[0] == value[-1] and value[0] in {'"', "'"}:
            value = value[1:-1]
        os.environ[key] = value


def get_sim_env(environ: Mapping[str, str] | None = None) -> dict[str, str]:
    """Raw DISC_LQG_* simulation overrides, keyed by lower-case setting name."""
    source = os.environ if environ is None else environ
    return {
        key.lower(): source[SIM_ENV_PREFIX + key]
        for key in SIM_ENV_KEYS
        if source.get(SIM_ENV_PREFIX + key, "").strip()
    }
