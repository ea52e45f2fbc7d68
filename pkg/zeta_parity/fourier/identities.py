"""Exact residuals of the two periodization identities.

Evaluating the Fourier series of the even periodization of ``f`` (degree at most ``2p``) at 0
gives

    f(0) = (1/pi) int_0^pi f - (2/pi) sum_{k=1}^{p} (-1)^(k-1)
           (f^(2k-1)(pi) xi(2k) + f^(2k-1)(0) zeta(2k)),

and the odd periodization of an odd ``f`` (degree at most ``2p + 1``) at pi/2 gives

    f(pi/2) = (2/pi) sum_{k=0}^{p} (-1)^k f^(2k)(pi) psi(2k + 1).

Substituting the closed forms ``xi(2k) = A_k pi^(2k)``, ``zeta(2k) = B_k pi^(2k)`` and
``psi(2k + 1) = C_k pi^(2k + 1)`` makes both sides elements of Q[pi], so the residual
``left - right`` must be exactly zero.
"""
from fractions import Fraction

import mpmath
from pydantic import NonNegativeInt, PositiveInt, validate_call

from zeta_parity.coefficients.cache import CoefficientCache
from zeta_parity.coefficients.sequences import coeff_a, coeff_b, coeff_c
from zeta_parity.core.pi_value import PiValue
from zeta_parity.core.polynomial import Polynomial, as_pi_polynomial
from zeta_parity.fourier.coefficients import check_even_order, check_odd_order, sign


SOUNDNESS_PRECISION_DIGITS = 60
"""Working precision used to evaluate non-zero residuals numerically."""

SOUNDNESS_RELATIVE_TOLERANCE = mpmath.mpf(10) ** -40
"""A non-zero residual this small relative to its terms signals an arithmetic fault."""


class ResidualInconsistencyError(ArithmeticError):
    """A non-zero exact residual whose numeric value is indistinguishable from zero."""

    def __init__(
        self, message: str = "Non-zero exact residual evaluates numerically to zero."
    ) -> None:
        """Initialise the residual inconsistency error.

        Args:
            message: Error message.
        """
        super().__init__(message)


@validate_call(config={"arbitrary_types_allowed": True})
def even_identity_residual(
    polynomial: Polynomial, p: PositiveInt, cache: CoefficientCache | None = None
) -> PiValue:
    """Residual of the even periodization identity at 0.

    Example:
        >>> from zeta_parity.core.polynomial import PiPolynomial, QPolynomial
        >>> even_identity_residual(QPolynomial.monomial(4), 2)
        PiValue('0')
        >>> even_identity_residual(PiPolynomial.shifted_power(6), 3)
        PiValue('0')

    Args:
        polynomial: Restriction of the function to [0, pi], of degree at most ``2p``.
        p: Order of the identity.
        cache: Coefficient cache (defaults to the shared one).

    Returns:
        The exact residual, zero when the identity holds.
    """
    check_even_order(polynomial, p)
    extended = as_pi_polynomial(polynomial)

    series = PiValue()
    for k in range(1, p + 1):
        derivative = extended.derivative(2 * k - 1)
        xi = PiValue.monomial(coeff_a(k, cache), 2 * k)
        zeta = PiValue.monomial(coeff_b(k, cache), 2 * k)
        term = (
            derivative.evaluate_at_pi_multiple(1) * xi
            + derivative.evaluate_at_pi_multiple(0) * zeta
        )
        series += term * sign(k - 1)

    left = extended.evaluate_at_pi_multiple(0)
    right = (extended.integral_0_to_pi() - series * 2).divided_by_pi()
    return left - right


@validate_call(config={"arbitrary_types_allowed": True})
def odd_identity_residual(
    polynomial: Polynomial, p: NonNegativeInt, cache: CoefficientCache | None = None
) -> PiValue:
    """Residual of the odd periodization identity at pi/2.

    Example:
        >>> from zeta_parity.core.polynomial import QPolynomial
        >>> odd_identity_residual(QPolynomial.monomial(5), 2)
        PiValue('0')

    Args:
        polynomial: Odd restriction of the function to [0, pi], of degree at most ``2p + 1``.
        p: Order of the identity.
        cache: Coefficient cache (defaults to the shared one).

    Returns:
        The exact residual, zero when the identity holds.
    """
    check_odd_order(polynomial, p)
    extended = as_pi_polynomial(polynomial)

    series = PiValue()
    for k in range(p + 1):
        psi = PiValue.monomial(coeff_c(k, cache), 2 * k + 1)
        series += extended.derivative(2 * k).evaluate_at_pi_multiple(1) * psi * sign(k)

    left = extended.evaluate_at_pi_multiple(Fraction(1, 2))
    right = (series * 2).divided_by_pi()
    return left - right


def check_residual_soundness(residual: PiValue) -> None:
    """Flag a non-zero residual whose real value is numerically zero.

    Distinct elements of Q[pi] are distinct reals, so a non-zero residual must evaluate to a
    non-zero number. A residual that cancels to far below the size of its own terms can only come
    from faulty exact arithmetic.

    Args:
        residual: Exact residual of an identity.

    Raises:
        ResidualInconsistencyError: If the residual is non-zero but evaluates to about zero.
    """
    if not residual:
        return

    with mpmath.workdps(SOUNDNESS_PRECISION_DIGITS):
        value = residual.to_mpf()
        scale = mpmath.fsum(abs(term.to_mpf()) for term in _split_terms(residual))
        if abs(value) <= SOUNDNESS_RELATIVE_TOLERANCE * scale:
            error_message = f"Residual {residual} is non-zero but evaluates to {value}."
            raise ResidualInconsistencyError(error_message)


def _split_terms(value: PiValue) -> list[PiValue]:
    return [PiValue.monomial(coefficient, exponent) for exponent, coefficient in value]
