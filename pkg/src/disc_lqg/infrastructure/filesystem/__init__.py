"""Filesystem-backed adapters."""
