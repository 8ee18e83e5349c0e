"""Logger adapter for CLI usage."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import TextIO


@dataclass(slots=True)
class StderrLogger:
    """Prefixed lines on stderr; stdout stays reserved for the report."""

    stream: TextIO = field(default_factory=lambda: sys.stderr)

    def info(self, message: str) -> None:
        print(f"[INFO] {message}", file=self.stream)

    def warn(self, message: str) -> None:
        print(f"[WARN] {message}", file=self.stream)

    def error(self, message: str) -> None:
        print(f"[ERROR] {message}", file=self.stream)
