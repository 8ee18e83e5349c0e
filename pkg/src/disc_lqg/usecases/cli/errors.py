"""Typed CLI orchestration errors."""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class CliError(Exception):
    """Base class for user-facing CLI use-case errors."""

    message: str

    def __str__(self) -> str:
        return self.message


class CliParseError(CliError):
    """Problem file missing or malformed (maps to exit code 4)."""


@dataclass(frozen=True, slots=True)
class CliValidationError(CliError):
    """Problem data or run parameters violate invariants (maps to exit code 2)."""

    issues: tuple[str, ...] = ()


class CliSolverError(CliError):
    """Synthesis, oracle or simulation failed (maps to exit code 3)."""
