import json
from dataclasses import replace

import pytest

from disc_lqg.domain.model.problem import SimBlock
from disc_lqg.usecases.analysis.api import (
    AnalysisRequest,
    RunAnalysis,
    build_error_report,
    build_report,
    problem_to_payload,
)

from conftest import GOLDEN_J, GOLDEN_X


class _SilentLogger:
    def info(self, message: str) -> None:
        del message

    def warn(self, message: str) -> None:
        del message

    def error(self, message: str) -> None:
        del message


def test_problem_payload_uses_flat_file_layout(golden) -> None:
    payload = problem_to_payload(golden)

    assert list(payload) == [
        "schema_version", "A", "B", "C", "D", "W", "V", "mu0", "Sigma0", "Q", "R", "alpha",
    ]
    assert payload["mu0"] == [0.0]
    assert payload["D"] == [[0.0]]
    assert payload["alpha"] == -0.5


def test_problem_payload_keeps_only_set_sim_fields(golden) -> None:
    payload = problem_to_payload(replace(golden, sim=SimBlock(dt=0.01, seed=4)))

    assert payload["sim"] == {"dt": 0.01, "seed": 4}


def test_design_report_carries_gains_and_cost(golden) -> None:
    result = RunAnalysis(logger=_SilentLogger()).run(AnalysisRequest(mode="design", problem=golden))

    report = build_report(result)

    assert report["schema_version"] == 1
    assert report["design"] == {
        "name": "lqg_discounted",
        "label": "discounted (alpha=-0.5); Thm 5",
        "discounted": True,
    }
    assert report["gains"]["F"][0][0] == pytest.approx(GOLDEN_X)
    assert report["riccati"]["E"][0][0] == pytest.approx(1.0)
    assert report["cost"]["kind"] == "finite_total"
    assert report["cost"]["value"] == pytest.approx(GOLDEN_J, abs=1e-7)
    assert all(diag["data_relative_residual"] <= 1e-9 for diag in report["diagnostics"])
    assert report["closed_loop_eigenvalues"][0]["im"] == 0.0
    assert report["verification"] is None
    assert report["simulation"] is None
    assert report["error"] is None
    json.dumps(report)


def test_verify_report_lists_checks(golden) -> None:
    result = RunAnalysis(logger=_SilentLogger()).run(AnalysisRequest(mode="verify", problem=golden))

    verification = build_report(result)["verification"]

    assert verification["passed"] is True
    assert verification["joint_cost"]["total"] == pytest.approx(GOLDEN_J, abs=1e-7)
    assert verification["perturbation_scan"]["argmin"] == [4, 4]
    assert all(check["passed"] for check in verification["checks"])


def test_error_report_has_kind_and_issues(golden) -> None:
    report = build_error_report(
        mode="verify",
        kind="validation",
        message="W not positive definite",
        error_type="ProblemValidationError",
        issues=("W not positive definite",),
        problem=golden,
    )

    assert report["error"] == {
        "kind": "validation",
        "message": "W not positive definite",
        "issues": ["W not positive definite"],
        "error_type": "ProblemValidationError",
    }
    assert report["input"]["alpha"] == -0.5
