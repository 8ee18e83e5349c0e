import json
from pathlib import Path

import numpy as np
import pytest

from disc_lqg.infrastructure.filesystem.problem_json_store import ProblemJsonStore, parse_problem
from disc_lqg.usecases.analysis.api import problem_to_payload


CASE_ROOT = Path(".tmp_test_artifacts") / "problem_json_store"


def _remove_tree(path: Path) -> None:
    if not path.exists():
        return
    for child in sorted(path.rglob("*"), reverse=True):
        if child.is_file():
            child.unlink()
        elif child.is_dir():
            child.rmdir()
    path.rmdir()


@pytest.fixture(autouse=True)
def _cleanup_case_root() -> None:
    _remove_tree(CASE_ROOT)
    yield
    _remove_tree(CASE_ROOT)


def _case_dir(name: str) -> Path:
    case_dir = CASE_ROOT / name
    case_dir.mkdir(parents=True, exist_ok=True)
    return case_dir


def _golden_payload() -> dict[str, object]:
    return {
        "A": [[0.0]],
        "B": [[1.0]],
        "C": [[1.0]],
        "V": [[1.0]],
        "W": [[1.0]],
        "mu0": [0.0],
        "Sigma0": [[1.0]],
        "Q": [[1.0]],
        "R": [[1.0]],
        "alpha": -0.5,
    }


def test_store_loads_problem_relative_to_cwd() -> None:
    case_dir = _case_dir("load")
    (case_dir / "golden.json").write_text(json.dumps(_golden_payload()), encoding="utf-8")

    problem = ProblemJsonStore(cwd=case_dir).load("golden.json")

    assert problem.is_output_feedback
    assert problem.cost.alpha == -0.5
    np.testing.assert_array_equal(problem.system.D, [[0.0]])
    assert problem.sim is None


def test_missing_file_raises_runtime_error() -> None:
    with pytest.raises(RuntimeError, match="failed to read problem file"):
        ProblemJsonStore(cwd=_case_dir("missing")).load("nope.json")


def test_malformed_json_raises_value_error() -> None:
    case_dir = _case_dir("malformed")
    (case_dir / "broken.json").write_text("{\"A\": [[0.0]", encoding="utf-8")

    with pytest.raises(ValueError, match="invalid problem json"):
        ProblemJsonStore(cwd=case_dir).load("broken.json")


def test_full_state_problem_defaults_initial_belief_and_alpha() -> None:
    problem = parse_problem({"A": 0.0, "B": 1.0, "V": 1.0, "Q": 1.0, "R": 1.0})

    assert not problem.is_output_feedback
    assert problem.cost.alpha == 0.0
    np.testing.assert_array_equal(problem.belief.mu0, [0.0])
    np.testing.assert_array_equal(problem.belief.Sigma0, [[0.0]])


def test_sim_block_is_parsed() -> None:
    payload = _golden_payload() | {"sim": {"dt": 0.01, "trajectories": 100, "seed": 2}}

    problem = parse_problem(payload)

    assert problem.sim is not None
    assert (problem.sim.dt, problem.sim.horizon, problem.sim.trajectories, problem.sim.seed) == (
        0.01,
        None,
        100,
        2,
    )


@pytest.mark.parametrize(
    ("change", "message"),
    [
        ({"Z": 1.0}, "unknown problem key"),
        ({"schema_version": 2}, "unsupported problem schema_version"),
        ({"W": None}, "must be numeric"),
        ({"alpha": True}, "alpha must be number"),
        ({"alpha": "fast"}, "alpha must be number"),
        ({"A": [0.0, 1.0]}, "nested array of rows"),
        ({"A": [[0.0, 1.0], [2.0]]}, "rectangular"),
        ({"Q": "1"}, "must be numeric"),
        ({"sim": {"trajectories": 0}}, "trajectories must be positive"),
        ({"sim": {"steps": 10}}, "unknown sim key"),
    ],
)
def test_malformed_fields_are_rejected(change: dict[str, object], message: str) -> None:
    with pytest.raises(ValueError, match=message):
        parse_problem(_golden_payload() | change)


def test_required_keys_and_output_pairing_are_enforced() -> None:
    payload = _golden_payload()
    del payload["R"]
    with pytest.raises(ValueError, match="missing required key R"):
        parse_problem(payload)

    payload = _golden_payload()
    del payload["W"]
    with pytest.raises(ValueError, match="C and W together"):
        parse_problem(payload)

    payload = _golden_payload()
    del payload["C"], payload["W"]
    with pytest.raises(ValueError, match="D requires C and W"):
        parse_problem(payload | {"D": [[0.0]]})


def test_non_object_payload_is_rejected() -> None:
    with pytest.raises(ValueError, match="must be object"):
        parse_problem([1, 2, 3])


def test_serialized_problem_parses_back_identically(random_problem_factory) -> None:
    problem = random_problem_factory(17)

    restored = parse_problem(json.loads(json.dumps(problem_to_payload(problem))))

    for name in ("A", "B", "C", "D", "V", "W"):
        np.testing.assert_array_equal(getattr(restored.system, name), getattr(problem.system, name))
    np.testing.assert_array_equal(restored.belief.mu0, problem.belief.mu0)
    np.testing.assert_array_equal(restored.belief.Sigma0, problem.belief.Sigma0)
    np.testing.assert_array_equal(restored.cost.Q, problem.cost.Q)
    assert restored.cost.alpha == problem.cost.alpha
