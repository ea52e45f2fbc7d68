"""Decimal rendering of exact values."""
from fractions import Fraction

from pydantic import PositiveInt, validate_call

from zeta_parity.core.fixed_decimal import FixedDecimal
from zeta_parity.core.pi_value import PiValue
from zeta_parity.numeric.constants import DEFAULT_GUARD_DIGITS, pi_truncated


@validate_call(config={"arbitrary_types_allowed": True})
def render_decimal(value: PiValue, digits: PositiveInt) -> FixedDecimal:
    """Round the real number a `PiValue` represents to a number of decimals.

    The value is enclosed using a certified truncation of pi with guard digits, which are doubled
    until the enclosure is narrow enough for the rounded result to be within ``10^-digits``.

    Example:
        >>> from fractions import Fraction
        >>> str(render_decimal(PiValue.monomial(Fraction(1, 6), 2), 10))
        '1.6449340668'
        >>> str(render_decimal(PiValue(), 3))
        '0.000'

    Args:
        value: Exact value to render.
        digits: Decimals to keep.

    Returns:
        The rounded decimal with its error bound (zero for the zero value).
    """
    if not value:
        return FixedDecimal(0, digits)

    tolerance = Fraction(1, 10**digits)
    guard_digits = DEFAULT_GUARD_DIGITS
    while True:
        pi = pi_truncated(digits + guard_digits)
        lower, upper = value.interval(pi.value, pi.value + pi.error_bound)
        rounded = FixedDecimal.from_interval(lower, upper, digits)
        if rounded.error_bound <= tolerance:
            return rounded
        guard_digits *= 2
