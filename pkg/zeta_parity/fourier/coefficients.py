"""Exact Fourier coefficients of the periodic extensions of polynomials on [0, pi].

Repeated integration by parts turns ``(2/pi) * integral f(t) cos(nt)`` (or ``sin``) into a finite
sum over the odd (or even) derivatives of ``f`` at 0 and pi. The sum terminates because a
polynomial of degree ``2p`` (or ``2p + 1``) has a constant derivative of that order, whose
remaining integral against the cosine (or sine) vanishes.
"""
from dataclasses import dataclass
from typing import final

from pydantic import NonNegativeInt, PositiveInt, validate_call

from zeta_parity.core.pi_value import PiValue
from zeta_parity.core.polynomial import Polynomial, as_pi_polynomial


class DegreeOverflowError(ValueError):
    """Polynomial degree above what an identity or coefficient formula allows."""

    def __init__(self, message: str = "Polynomial degree is too high for this order.") -> None:
        """Initialise the degree overflow error.

        Args:
            message: Error message.
        """
        super().__init__(message)


class NotOddPolynomialError(ValueError):
    """Polynomial with a non-zero even-power coefficient where an odd one is required."""

    def __init__(self, message: str = "Polynomial is not odd.") -> None:
        """Initialise the not-odd polynomial error.

        Args:
            message: Error message.
        """
        super().__init__(message)


def sign(exponent: int) -> int:
    """Value of ``(-1)^exponent`` for any integer exponent (negative ones included)."""
    return -1 if exponent % 2 else 1


@final
@dataclass(frozen=True)
class FourierCoefficientValue:
    """Exact Fourier coefficient of a periodized polynomial."""

    index: int
    """Harmonic ``n >= 1``."""

    value: PiValue
    """Exact coefficient (exponents of pi are at least -1)."""


def check_even_order(polynomial: Polynomial, p: int) -> None:
    """Check a polynomial fits the even periodization formulas of order ``p``.

    Args:
        polynomial: Polynomial on [0, pi].
        p: Order, allowing degrees up to ``2p``.

    Raises:
        DegreeOverflowError: If the degree exceeds ``2p``.
    """
    if polynomial.degree > 2 * p:
        error_message = f"Degree {polynomial.degree} of {polynomial} exceeds 2p = {2 * p}."
        raise DegreeOverflowError(error_message)


def check_odd_order(polynomial: Polynomial, p: int) -> None:
    """Check a polynomial fits the odd periodization formulas of order ``p``.

    Args:
        polynomial: Polynomial on [0, pi].
        p: Order, allowing degrees up to ``2p + 1``.

    Raises:
        NotOddPolynomialError: If an even power has a non-zero coefficient.
        DegreeOverflowError: If the degree exceeds ``2p + 1``.
    """
    if not polynomial.is_odd:
        error_message = f"{polynomial} has non-zero even-power coefficients."
        raise NotOddPolynomialError(error_message)
    if polynomial.degree > 2 * p + 1:
        error_message = f"Degree {polynomial.degree} of {polynomial} exceeds 2p + 1 = {2 * p + 1}."
        raise DegreeOverflowError(error_message)


@validate_call(config={"arbitrary_types_allowed": True})
def cos_coefficient(
    polynomial: Polynomial, p: PositiveInt, n: PositiveInt
) -> FourierCoefficientValue:
    """Cosine coefficient ``a_n`` of the even 2pi-periodic extension.

    ``a_n = (2/pi) sum_{k=1}^{p} (-1)^(k-1) ((-1)^n f^(2k-1)(pi) - f^(2k-1)(0)) / n^(2k)``

    Example:
        >>> from zeta_parity.core.polynomial import QPolynomial
        >>> print(cos_coefficient(QPolynomial.monomial(2), 1, 1).value)
        -4
        >>> print(cos_coefficient(QPolynomial.monomial(2), 1, 2).value)
        1

    Args:
        polynomial: Restriction of the function to [0, pi], of degree at most ``2p``.
        p: Order of the formula.
        n: Harmonic.

    Returns:
        The exact coefficient.
    """
    check_even_order(polynomial, p)
    extended = as_pi_polynomial(polynomial)
    total = PiValue()
    for k in range(1, p + 1):
        derivative = extended.derivative(2 * k - 1)
        at_pi = derivative.evaluate_at_pi_multiple(1)
        at_zero = derivative.evaluate_at_pi_multiple(0)
        total += (at_pi * sign(n) - at_zero) * sign(k - 1) / n ** (2 * k)
    return FourierCoefficientValue(index=n, value=(total * 2).divided_by_pi())


@validate_call(config={"arbitrary_types_allowed": True})
def sin_coefficient(
    polynomial: Polynomial, p: NonNegativeInt, n: PositiveInt
) -> FourierCoefficientValue:
    """Sine coefficient ``b_n`` of the odd 2pi-periodic extension.

    ``b_n = (2/pi) sum_{k=0}^{p} (-1)^(k-1) (-1)^n f^(2k)(pi) / n^(2k+1)``

    Example:
        >>> from zeta_parity.core.polynomial import QPolynomial
        >>> t = QPolynomial.monomial(1)
        >>> print(sin_coefficient(t, 0, 1).value, sin_coefficient(t, 0, 2).value)
        2 -1

    Args:
        polynomial: Odd restriction of the function to [0, pi], of degree at most ``2p + 1``.
        p: Order of the formula.
        n: Harmonic.

    Returns:
        The exact coefficient.
    """
    check_odd_order(polynomial, p)
    extended = as_pi_polynomial(polynomial)
    total = PiValue()
    for k in range(p + 1):
        at_pi = extended.derivative(2 * k).evaluate_at_pi_multiple(1)
        total += at_pi * (sign(k - 1) * sign(n)) / n ** (2 * k + 1)
    return FourierCoefficientValue(index=n, value=(total * 2).divided_by_pi())
