"""Exact arithmetic core."""
