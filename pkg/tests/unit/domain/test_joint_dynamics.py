import numpy as np
import pytest

from disc_lqg.domain.model.cost_spec import CostSpec
from disc_lqg.domain.model.gain_pair import GainPair
from disc_lqg.domain.model.initial_belief import InitialBelief
from disc_lqg.domain.model.linear_system import LinearSystem
from disc_lqg.domain.services.oracle import build_joint


def test_state_error_blocks_for_golden_plant(golden) -> None:
    joint = build_joint(golden.system, golden.belief, GainPair(F=[[1.0]], K=[[1.0]]), golden.cost)

    assert joint.coordinates == "state_error"
    assert joint.n == 1
    np.testing.assert_allclose(joint.Atilde, [[-1.0, -1.0], [0.0, -1.0]])
    np.testing.assert_allclose(joint.Vtilde, [[1.0, -1.0], [-1.0, 2.0]])
    np.testing.assert_allclose(joint.Qtilde, [[2.0, 1.0], [1.0, 1.0]])
    np.testing.assert_allclose(joint.Sigma_tilde0, [[1.0, -1.0], [-1.0, 1.0]])


def test_estimate_error_blocks_for_golden_plant(golden) -> None:
    joint = build_joint(
        golden.system,
        golden.belief,
        GainPair(F=[[1.0]], K=[[1.0]]),
        golden.cost,
        coordinates="estimate_error",
    )

    np.testing.assert_allclose(joint.Atilde, [[-1.0, -1.0], [0.0, -1.0]])
    np.testing.assert_allclose(joint.Vtilde, [[1.0, 1.0], [1.0, 2.0]])
    np.testing.assert_allclose(joint.Qtilde, [[2.0, -1.0], [-1.0, 1.0]])
    np.testing.assert_allclose(joint.Sigma_tilde0, [[0.0, 0.0], [0.0, 1.0]])


def test_zero_gains_decouple_plant_and_error() -> None:
    A = np.array([[0.0, 1.0], [-2.0, -3.0]])
    system = LinearSystem(A=A, B=[[0.0], [1.0]], V=np.eye(2), C=[[1.0, 0.0]], W=[[1.0]])
    belief = InitialBelief(mu0=np.zeros(2), Sigma0=np.eye(2))
    cost = CostSpec(Q=np.diag([1.0, 2.0]), R=[[1.0]], alpha=-0.1)

    joint = build_joint(system, belief, GainPair(F=np.zeros((1, 2)), K=np.zeros((2, 1))), cost)

    np.testing.assert_allclose(joint.block("Atilde", 1, 1), A)
    np.testing.assert_allclose(joint.block("Atilde", 1, 2), np.zeros((2, 2)))
    np.testing.assert_allclose(joint.block("Atilde", 2, 2), A)
    np.testing.assert_allclose(joint.Qtilde[:2, :2], np.diag([1.0, 2.0]))
    np.testing.assert_allclose(joint.Qtilde[2:, :], np.zeros((2, 4)))
    np.testing.assert_allclose(
        joint.Sigma_tilde0, np.block([[np.eye(2), -np.eye(2)], [-np.eye(2), np.eye(2)]])
    )


def test_estimate_override_shifts_initial_moments(golden) -> None:
    joint = build_joint(
        golden.system, golden.belief, GainPair(F=[[1.0]], K=[[1.0]]), golden.cost, x_hat0=[0.5]
    )

    np.testing.assert_allclose(joint.mu_tilde0, [0.0, 0.5])
    np.testing.assert_allclose(joint.Sigma_tilde0, [[1.0, -1.0], [-1.0, 1.25]])


def test_joint_assembly_needs_both_gains(golden) -> None:
    with pytest.raises(ValueError, match="observer gain"):
        build_joint(golden.system, golden.belief, GainPair(F=[[1.0]]), golden.cost)


def test_unknown_coordinates_are_rejected(golden) -> None:
    with pytest.raises(ValueError, match="unknown joint coordinates"):
        build_joint(
            golden.system,
            golden.belief,
            GainPair(F=[[1.0]], K=[[1.0]]),
            golden.cost,
            coordinates="polar",  # type: ignore[arg-type]
        )
