"""Seeded random polynomials with bounded-height rational coefficients."""
from fractions import Fraction
from typing import Final

import numpy as np
from pydantic import NonNegativeInt, PositiveInt, validate_call

from zeta_parity.core.polynomial import QPolynomial


DEFAULT_HEIGHT: Final[int] = 10**6
"""Largest absolute numerator and largest denominator of generated coefficients."""


def _random_fraction(rng: np.random.Generator, height: int, *, nonzero: bool = False) -> Fraction:
    low = 1 if nonzero else 0
    numerator = int(rng.integers(low, height, endpoint=True))
    if rng.integers(0, 2):
        numerator = -numerator
    denominator = int(rng.integers(1, height, endpoint=True))
    return Fraction(numerator, denominator)


@validate_call(config={"arbitrary_types_allowed": True})
def random_polynomial(
    rng: np.random.Generator, degree: NonNegativeInt, height: PositiveInt = DEFAULT_HEIGHT
) -> QPolynomial:
    """Random polynomial of exactly the given degree.

    Example:
        >>> rng = np.random.default_rng(42)
        >>> random_polynomial(rng, 4, height=9).degree
        4

    Args:
        rng: Random generator (seed it for reproducible runs).
        degree: Degree of the polynomial.
        height: Bound on numerators and denominators.

    Returns:
        The polynomial, with a non-zero leading coefficient.
    """
    coefficients = [_random_fraction(rng, height) for _ in range(degree)]
    coefficients.append(_random_fraction(rng, height, nonzero=True))
    return QPolynomial(coefficients)


@validate_call(config={"arbitrary_types_allowed": True})
def random_odd_polynomial(
    rng: np.random.Generator, degree: NonNegativeInt, height: PositiveInt = DEFAULT_HEIGHT
) -> QPolynomial:
    """Random odd polynomial of exactly the given (odd) degree.

    Example:
        >>> rng = np.random.default_rng(42)
        >>> odd = random_odd_polynomial(rng, 5, height=9)
        >>> odd.degree, odd.is_odd
        (5, True)

    Args:
        rng: Random generator (seed it for reproducible runs).
        degree: Odd degree of the polynomial.
        height: Bound on numerators and denominators.

    Returns:
        The polynomial, with zero even-power coefficients and a non-zero leading coefficient.

    Raises:
        ValueError: If the degree is even.
    """
    if degree % 2 == 0:
        error_message = f"An odd polynomial needs an odd degree, got {degree}."
        raise ValueError(error_message)

    coefficients: list[Fraction] = []
    for power in range(degree):
        coefficients.append(_random_fraction(rng, height) if power % 2 else Fraction(0))
    coefficients.append(_random_fraction(rng, height, nonzero=True))
    return QPolynomial(coefficients)
