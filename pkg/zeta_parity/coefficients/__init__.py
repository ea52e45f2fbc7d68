"""Rational coefficient sequences."""
