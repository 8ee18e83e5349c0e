"""Outbound port for reading problem files."""

from __future__ import annotations

from typing import Protocol

from disc_lqg.domain.model.problem import Problem


class ProblemLoaderPort(Protocol):
    """Raises RuntimeError when the file cannot be read, ValueError when it is malformed."""

    def load(self, path: str) -> Problem:
        ...
