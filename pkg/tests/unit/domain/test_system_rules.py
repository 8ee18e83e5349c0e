import numpy as np

import pytest

from disc_lqg.domain.errors import ProblemValidationError
from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.services.system_rules import (
    ensure_valid,
    is_detectable,
    is_stabilizable,
    shifted_a,
    validate_problem,
)


def _golden_parts(**overrides: object) -> tuple[LinearSystem, InitialBelief, CostSpec]:
    data: dict[str, object] = {
        "A": [[0.0]],
        "B": [[1.0]],
        "V": [[1.0]],
        "C": [[1.0]],
        "W": [[1.0]],
        "mu0": [0.0],
        "Sigma0": [[1.0]],
        "Q": [[1.0]],
        "R": [[1.0]],
    }
    data.update(overrides)
    system = LinearSystem(A=data["A"], B=data["B"], V=data["V"], C=data["C"], W=data["W"])
    belief = InitialBelief(mu0=data["mu0"], Sigma0=data["Sigma0"])
    cost = CostSpec(Q=data["Q"], R=data["R"], alpha=-0.5)
    return system, belief, cost


def test_pbh_stabilizability_flags_uncontrollable_unstable_mode() -> None:
    assert is_stabilizable([[1.0]], [[0.0]]) is False
    assert is_stabilizable([[-1.0]], [[0.0]]) is True
    assert is_stabilizable(np.diag([1.0, -1.0]), [[1.0], [0.0]]) is True
    assert is_stabilizable(np.diag([-1.0, 1.0]), [[1.0], [0.0]]) is False


def test_marginal_modes_count_as_unstable() -> None:
    assert is_stabilizable([[0.0]], [[0.0]]) is False


def test_detectability_is_dual_of_stabilizability() -> None:
    assert is_detectable([[1.0]], [[0.0]]) is False
    assert is_detectable(np.diag([1.0, -2.0]), [[1.0, 0.0]]) is True


def test_shifted_a_returns_original_matrix_for_zero_alpha() -> None:
    system = LinearSystem.full_state([[1.0]], [[1.0]], [[0.0]])

    assert shifted_a(system, 0.0) is system.A
    np.testing.assert_allclose(shifted_a(system, -0.5), [[0.5]])


def test_validate_problem_accepts_golden_problem() -> None:
    report = validate_problem(*_golden_parts())

    assert report.is_valid
    assert report.issues == ()


def test_validate_problem_reports_singular_measurement_noise() -> None:
    report = validate_problem(*_golden_parts(W=[[0.0]]))

    assert "W not positive definite" in report.issues


def test_validate_problem_reports_shape_mismatch() -> None:
    report = validate_problem(*_golden_parts(B=[[1.0], [2.0]]))

    assert report.issues == ("B must be 1x1, got 2x1",)


def test_validate_problem_rejects_second_moment_below_mean_square() -> None:
    report = validate_problem(*_golden_parts(mu0=[1.0], Sigma0=[[0.5]]))

    assert report.issues == ("Σ₀ − μ₀μ₀ᵀ not PSD",)


def test_validate_problem_reports_indefinite_weights_and_non_symmetric_noise() -> None:
    report = validate_problem(*_golden_parts(Q=[[-1.0]], R=[[0.0]]))

    assert "Q not positive semidefinite" in report.issues
    assert "R not positive definite" in report.issues

    asymmetric = np.array([[1.0, 1.0], [0.0, 1.0]])
    system = LinearSystem.full_state(np.zeros((2, 2)), np.eye(2), asymmetric)
    belief = InitialBelief(mu0=np.zeros(2), Sigma0=np.zeros((2, 2)))
    cost = CostSpec(Q=np.eye(2), R=np.eye(2))
    assert "V not symmetric" in validate_problem(system, belief, cost).issues


def test_validate_problem_reports_non_finite_entries() -> None:
    report = validate_problem(*_golden_parts(A=[[float("inf")]]))

    assert report.issues == ("A contains non-finite entries",)


def test_ensure_valid_raises_with_all_issues() -> None:
    with pytest.raises(ProblemValidationError) as excinfo:
        ensure_valid(*_golden_parts(W=[[0.0]], R=[[-1.0]]))

    assert excinfo.value.issues == ("W not positive definite", "R not positive definite")
    assert "W not positive definite" in str(excinfo.value)


def test_double_integrator_is_stabilizable_and_detectable() -> None:
    a = [[0.0, 1.0], [0.0, 0.0]]

    assert is_stabilizable(a, [[0.0], [1.0]]) is True
    assert is_detectable(a, [[1.0, 0.0]]) is True
    assert is_detectable(a, [[0.0, 1.0]]) is False


def _pair_with_hidden_mode(rng: np.random.Generator, *, hidden_pole: float):
    """(A, B) whose last state is unreachable and evolves with rate hidden_pole."""
    n, m = 3, 2
    a = rng.normal(size=(n, n))
    a[n - 1, :] = 0.0
    a[n - 1, n - 1] = hidden_pole
    b = rng.normal(size=(n, m))
    b[n - 1, :] = 0.0
    return a, b


@pytest.mark.parametrize("seed", range(20))
def test_state_feedback_never_changes_stabilizability(seed: int) -> None:
    rng = np.random.default_rng(seed)
    generic_a, generic_b = rng.normal(size=(3, 3)), rng.normal(size=(3, 2))
    blocked_a, blocked_b = _pair_with_hidden_mode(rng, hidden_pole=0.5)
    hidden_stable_a, hidden_stable_b = _pair_with_hidden_mode(rng, hidden_pole=-0.5)

    for a, b, expected in (
        (generic_a, generic_b, True),
        (blocked_a, blocked_b, False),
        (hidden_stable_a, hidden_stable_b, True),
    ):
        f = rng.normal(size=(2, 3))
        assert is_stabilizable(a, b) is expected
        assert is_stabilizable(a - b @ f, b) is expected
