"""Closed-form evaluation and parity typology."""
