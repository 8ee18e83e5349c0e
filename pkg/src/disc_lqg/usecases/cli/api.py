"""Public API for the cli slice."""

from .service import CliApplicationService

__all__ = ["CliApplicationService"]
