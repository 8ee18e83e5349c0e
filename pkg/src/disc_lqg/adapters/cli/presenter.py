"""Output presenter helpers for CLI commands."""

from __future__ import annotations

import json
import sys

from disc_lqg.usecases.cli.dto import AnalysisRunResult


def print_analysis_result(result: AnalysisRunResult) -> None:
    """Report JSON goes to stdout unless it was written to a file; summaries go to stderr."""
    if result.report_path is None:
        print(json.dumps(dict(result.report), ensure_ascii=False, indent=2))
    else:
        print(f"[INFO] report written to {result.report_path}", file=sys.stderr)
    print(f"[INFO] {result.mode}: {result.label}", file=sys.stderr)
    for name in result.failed_checks:
        print(f"[ERROR] verification check failed: {name}", file=sys.stderr)
