"""Outbound port for persisting report payloads."""

from __future__ import annotations

from typing import Mapping, Protocol


class ReportStorePort(Protocol):
    def save(self, report_payload: Mapping[str, object], path: str) -> str:
        ...
