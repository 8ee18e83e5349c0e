"""JSON-backed store for analysis reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from disc_lqg.usecases.cli.ports.report_store import ReportStorePort


@dataclass(slots=True)
class ReportJsonStore(ReportStorePort):
    """Persist one report payload into one JSON file."""

    cwd: Path = field(default_factory=Path.cwd)

    def save(self, report_payload: Mapping[str, object], path: str) -> str:
        if not path or not path.strip():
            raise ValueError("path must not be empty")

        target = Path(path)
        if not target.is_absolute():
            target = self.cwd / target

        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(render_report(report_payload), encoding="utf-8")
        return str(target)


def render_report(report_payload: Mapping[str, object]) -> str:
    return json.dumps(dict(report_payload), ensure_ascii=False, indent=2) + "\n"
