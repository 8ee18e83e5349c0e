"""Discounted-cost LQG controller/observer synthesis and verification."""
