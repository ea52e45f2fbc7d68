"""Fourier coefficients and identity residuals of polynomial periodizations."""
