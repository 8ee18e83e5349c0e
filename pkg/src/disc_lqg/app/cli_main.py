"""Thin CLI entrypoint that delegates to CLI adapter and app composition root."""

from __future__ import annotations

import sys
from typing import Sequence

from disc_lqg.adapters.cli.env import get_sim_env, load_env_from_dotenv
from disc_lqg.adapters.cli.main import run_cli
from disc_lqg.app.bootstrap import build_cli_application
from disc_lqg.app.settings import SimSettings


def build_settings() -> SimSettings:
    """Load entrypoint env and build simulation defaults."""
    load_env_from_dotenv()
    return SimSettings.from_env(get_sim_env())


def main(argv: Sequence[str] | None = None) -> int:
    try:
        settings = build_settings()
    except ValueError as exc:
        print(f"[ERROR] {exc}", file=sys.stderr)
        return 2
    app = build_cli_application(settings)
    return int(run_cli(argv, app))


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
