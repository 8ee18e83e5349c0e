"""Typed numerical errors raised by domain services."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class LqgError(Exception):
    """Base class for domain-level synthesis/verification failures."""

    message: str

    def __str__(self) -> str:
        return self.message


class NotHurwitz(LqgError):
    """A matrix required to be Hurwitz has an eigenvalue with Re >= -tol."""


class NotStabilizable(LqgError):
    """The (A, B) pair fails the PBH stabilizability test."""


class NotDetectable(LqgError):
    """The (A, C) pair fails the PBH detectability test."""


class NoStabilizingSolution(LqgError):
    """A Riccati equation has no stabilizing, positive semidefinite solution."""


class IndefiniteEffectiveNoise(LqgError):
    """The discounted filter noise term V - 2*alpha*(Sigma0 - mu0 mu0^T) is not PSD."""


class InternalConsistencyError(LqgError):
    """Two independent evaluations of the same quantity disagree beyond tolerance."""


class NotDiscountedStable(LqgError):
    """The shifted joint closed loop is not Hurwitz, so the discounted cost diverges."""


class AlphaNotNegative(LqgError):
    """A discounted total cost was requested for alpha >= 0."""


@dataclass(frozen=True, slots=True)
class NonFiniteState(LqgError):
    """A simulated trajectory diverged."""

    trajectory_index: int = -1


@dataclass(frozen=True, slots=True)
class ProblemValidationError(LqgError):
    """Problem data violates model invariants."""

    issues: tuple[str, ...] = ()
