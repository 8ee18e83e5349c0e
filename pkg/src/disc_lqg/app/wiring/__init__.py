"""Dependency wiring helpers."""
