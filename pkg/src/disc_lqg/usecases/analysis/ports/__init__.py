"""Ports for analysis use cases."""

from .logger import Logger

__all__ = ["Logger"]
