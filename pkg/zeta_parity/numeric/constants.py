"""Certified decimal expansions of pi and ln 2, and the exact partial sums of the ln 2 series.

Both constants are evaluated in big-integer fixed point: every arctangent term is a floor
division, so the accumulated error is bounded by an explicit count of units in the last place.
The guard digits grow until that error cannot change the truncated result.
"""
from collections.abc import Callable, Iterator
from fractions import Fraction
from functools import cache
import logging
from typing import Annotated, Final, NamedTuple

from pydantic import Field, NonNegativeInt, validate_call

from zeta_parity.core.fixed_decimal import FixedDecimal


logger = logging.getLogger(__name__)

MAX_DIGITS: Final[int] = 10_000
"""Largest number of decimals the public constant routines accept."""

DEFAULT_GUARD_DIGITS: Final[int] = 10
"""Extra decimals carried while evaluating the series."""


def _arctan_inverse(denominator: int, unit: int, *, hyperbolic: bool = False) -> tuple[int, int]:
    """Fixed-point ``unit * atan(1 / denominator)`` (or ``atanh`` when hyperbolic).

    Args:
        denominator: Integer ``x >= 2`` in ``atan(1 / x)``.
        unit: Fixed-point scale (a power of ten).
        hyperbolic: Use the all-positive ``atanh`` series instead of the alternating one.

    Returns:
        The approximation in units and a bound on its absolute error in units.
    """
    total = 0
    power = unit // denominator
    square = denominator * denominator
    terms = 0
    while power:
        term = power // (2 * terms + 1)
        total += term if hyperbolic or terms % 2 == 0 else -term
        power //= square
        terms += 1

    # Each term is off by less than two units; the omitted tail is below two units.
    return total, 2 * terms + 2


def _machin_pi(unit: int) -> tuple[int, int]:
    """Fixed-point pi from ``16 atan(1/5) - 4 atan(1/239)``."""
    first, first_error = _arctan_inverse(5, unit)
    second, second_error = _arctan_inverse(239, unit)
    return 16 * first - 4 * second, 16 * first_error + 4 * second_error


def _atanh_ln2(unit: int) -> tuple[int, int]:
    """Fixed-point ln 2 from ``2 atanh(1/3)``."""
    value, error = _arctan_inverse(3, unit, hyperbolic=True)
    return 2 * value, 2 * error


def _certified_truncation(evaluate: Callable[[int], tuple[int, int]], digits: int) -> FixedDecimal:
    guard_digits = DEFAULT_GUARD_DIGITS
    while True:
        unit = 10 ** (digits + guard_digits)
        approximation, error = evaluate(unit)
        shift = 10**guard_digits
        lowest, highest = (approximation - error) // shift, (approximation + error) // shift
        if lowest == highest:
            return FixedDecimal(lowest, digits, Fraction(1, 10**digits))
        guard_digits *= 2
        logger.debug("Raising guard digits to %d for %d decimals", guard_digits, digits)


@cache
def pi_truncated(digits: int) -> FixedDecimal:
    """Pi truncated to the given decimals, without an upper limit on the digits.

    Args:
        digits: Decimals to keep (at least 1).

    Returns:
        The truncation, certified: pi lies in ``[value, value + 10^-digits)``.
    """
    return _certified_truncation(_machin_pi, digits)


@cache
def ln2_truncated(digits: int) -> FixedDecimal:
    """Natural logarithm of 2 truncated to the given decimals.

    Args:
        digits: Decimals to keep (at least 1).

    Returns:
        The certified truncation.
    """
    return _certified_truncation(_atanh_ln2, digits)


@validate_call
def compute_pi(digits: Annotated[int, Field(ge=1, le=MAX_DIGITS)]) -> FixedDecimal:
    """Pi truncated to the requested number of decimals.

    Example:
        >>> str(compute_pi(10))
        '3.1415926535'
        >>> str(compute_pi(1))
        '3.1'

    Args:
        digits: Number of decimals, between 1 and `MAX_DIGITS`.

    Returns:
        Certified truncation of pi with error bound ``10^-digits``.
    """
    return pi_truncated(digits)


@validate_call
def compute_ln2(digits: Annotated[int, Field(ge=1, le=MAX_DIGITS)]) -> FixedDecimal:
    """Natural logarithm of 2 truncated to the requested number of decimals.

    Example:
        >>> str(compute_ln2(15))
        '0.693147180559945'

    Args:
        digits: Number of decimals, between 1 and `MAX_DIGITS`.

    Returns:
        Certified truncation of ln 2 with error bound ``10^-digits``.
    """
    return ln2_truncated(digits)


def render_ln2_multiple(coefficient: Fraction, digits: int) -> FixedDecimal:
    """Round ``coefficient * ln 2`` to the given decimals with a certified bound.

    Args:
        coefficient: Rational multiple of ln 2.
        digits: Decimals to keep.

    Returns:
        The rounded value, with error bound at most ``10^-digits``.
    """
    guard_digits = DEFAULT_GUARD_DIGITS
    while True:
        ln2 = ln2_truncated(digits + guard_digits)
        first, second = coefficient * ln2.lower, coefficient * ln2.upper
        rounded = FixedDecimal.from_interval(min(first, second), max(first, second), digits)
        if rounded.error_bound <= Fraction(1, 10**digits):
            return rounded
        guard_digits *= 2


class Ln2PartialSum(NamedTuple):
    """Partial sum of the alternating harmonic series and its distance bound to ln 2."""

    value: Fraction
    """Exact partial sum ``sum_{k=0}^{n} (-1)^k / (k + 1)``."""

    bound: Fraction
    """Exact bound ``1 / (n + 2)`` on ``|value - ln 2|``."""


@validate_call
def ln2_partial_sum(terms: NonNegativeInt) -> Ln2PartialSum:
    """Exact partial sum of ``sum (-1)^k / (k + 1)`` up to ``k = terms``.

    The remainder equals ``(-1)^n`` times the integral of ``t^(n+1) / (1 + t)`` over [0, 1],
    which is at most ``1 / (n + 2)``.

    Example:
        >>> ln2_partial_sum(0)
        Ln2PartialSum(value=Fraction(1, 1), bound=Fraction(1, 2))
        >>> ln2_partial_sum(1)
        Ln2PartialSum(value=Fraction(1, 2), bound=Fraction(1, 3))

    Args:
        terms: Index ``n`` of the last included term.

    Returns:
        The partial sum and its bound.
    """
    value = Fraction(0)
    for index in range(terms + 1):
        value += Fraction((-1) ** index, index + 1)
    return Ln2PartialSum(value, Fraction(1, terms + 2))


@validate_call
def ln2_partial_sums(max_terms: NonNegativeInt) -> Iterator[Ln2PartialSum]:
    """Stream the partial sums for ``n = 0 .. max_terms`` incrementally.

    Args:
        max_terms: Last index ``n`` to yield.

    Yields:
        The partial sum and bound for each ``n`` in order.
    """
    value = Fraction(0)
    for index in range(max_terms + 1):
        value += Fraction((-1) ** index, index + 1)
        yield Ln2PartialSum(value, Fraction(1, index + 2))
