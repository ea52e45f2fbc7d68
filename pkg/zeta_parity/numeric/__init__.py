"""Numeric summation and constants."""
