"""CLI-facing use-case facade."""
