"""Direct summation of the six series with rigorous error bounds.

Every series is ``sum_{k>=0} s^k (step * k + offset)^-x`` (see `SeriesShape`). A partial sum over
``k < N`` is completed with a certified bound on the rest:

* Non-alternating series: the tail lies between the integrals of the term function from ``N`` and
  from ``N - 1`` to infinity. The midpoint of that bracket is added to the partial sum and its
  half-width is the bound.
* Alternating series: the tail is bounded by the first omitted term. When that needs more terms
  than the configured ceiling, the Euler transform is used instead.

``N`` is always the smallest power of two that meets the tolerance. Floating-point round-off of
the partial sum is bounded explicitly and added to the tail bound. The value returned by either
route depends only on ``N``, not on the tolerance that selected it.
"""
from dataclasses import dataclass
import logging
import math
from typing import Final, final

import mpmath
import numpy as np
from pydantic import PositiveFloat, validate_call

from zeta_parity.closed_forms.function_id import FunctionId, SeriesShape
from zeta_parity.numeric.cancellation import CancellationToken
from zeta_parity.numeric.config import NumericConfig


logger = logging.getLogger(__name__)

UNIT_ROUNDOFF: Final[float] = 2.0**-53
"""Relative rounding error of one double-precision operation."""

FLOAT_ROUNDOFF_FACTOR: Final[int] = 8
"""Multiple of the unit round-off, times the sum of magnitudes, bounding double-precision error."""

EXTRA_PRECISION_DIGITS: Final[int] = 10
"""Decimal digits carried beyond the tolerance in multiprecision summation."""

DOUBLE_PATH_DIGITS: Final[int] = 40
"""Working precision at which double-precision chunks are accumulated and completed."""

DOUBLE_PATH_HEAD_TERMS: Final[int] = 2**12
"""Leading terms of a double-precision sum that are computed in multiprecision instead."""


class SeriesDomainError(ValueError):
    """Argument outside the interval where a series converges."""

    def __init__(self, message: str = "Argument outside the series' domain.") -> None:
        """Initialise the series domain error.

        Args:
            message: Error message.
        """
        super().__init__(message)


class ToleranceUnreachableError(RuntimeError):
    """The tolerance cannot be met within the configured term limits."""

    def __init__(self, message: str = "Tolerance unreachable within the term ceiling.") -> None:
        """Initialise the tolerance unreachable error.

        Args:
            message: Error message.
        """
        super().__init__(message)


@final
@dataclass(frozen=True)
class SummationResult:
    """Value of a series with a certified bound on its error."""

    value: mpmath.mpf
    """Approximate sum."""

    tail_bound: float
    """Bound on ``|value - true sum|``."""

    terms_used: int
    """Number of series terms (or transformed terms, when accelerated) used."""

    accelerated: bool = False
    """Whether the Euler transform was used."""


def _check_domain(function: FunctionId, x: float) -> None:
    if not math.isfinite(x) or x <= function.convergence_abscissa:
        error_message = (
            f"{function} converges only for x > {function.convergence_abscissa}, got x = {x}."
        )
        raise SeriesDomainError(error_message)


def _working_digits(tolerance: float, terms: int) -> int:
    digits = math.ceil(-math.log10(tolerance)) + math.ceil(math.log10(terms + 1))
    return digits + EXTRA_PRECISION_DIGITS


def _round_up(value: mpmath.mpf) -> float:
    return math.nextafter(float(value), math.inf)


def _integral_tail(shape: SeriesShape, x: mpmath.mpf, start: int) -> mpmath.mpf:
    """Integral of ``(step t + offset)^-x`` from ``start`` to infinity (needs ``x > 1``)."""
    return mpmath.power(shape.step * start + shape.offset, 1 - x) / (shape.step * (x - 1))


def _integral_bracket(shape: SeriesShape, x: float, terms: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Midpoint and half-width of the integral bracket of the tail after ``terms`` terms."""
    exponent = mpmath.mpf(x)
    lower = _integral_tail(shape, exponent, terms)
    upper = _integral_tail(shape, exponent, terms - 1)
    return (lower + upper) / 2, (upper - lower) / 2


def _tail_bound(shape: SeriesShape, x: float, terms: int) -> mpmath.mpf:
    if shape.alternating:
        return mpmath.power(shape.step * terms + shape.offset, -mpmath.mpf(x))
    _, half_width = _integral_bracket(shape, x, terms)
    return half_width


def _term_count(shape: SeriesShape, x: float, budget: float, ceiling: int) -> int | None:
    """Smallest power of two whose tail bound is within budget, or None past the ceiling."""
    terms = 1
    with mpmath.workdps(30):
        while terms <= ceiling:
            if _tail_bound(shape, x, terms) <= budget:
                return terms
            terms *= 2
    return None


def _multiprecision_partial_sum(
    shape: SeriesShape,
    x: float,
    terms: int,
    config: NumericConfig,
    cancel: CancellationToken | None,
) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Partial sum at the current working precision and the sum of the terms' magnitudes."""
    exponent = -int(x) if float(x).is_integer() else -mpmath.mpf(x)
    total = mpmath.mpf(0)
    magnitude = mpmath.mpf(0)
    for index in range(terms):
        if cancel is not None and index % config.chunk_size == 0:
            cancel.raise_if_cancelled()
        term = mpmath.power(shape.step * index + shape.offset, exponent)
        total += -term if shape.alternating and index % 2 else term
        magnitude += term
    return total, magnitude


def _float_partial_sum(
    shape: SeriesShape,
    x: float,
    terms: int,
    config: NumericConfig,
    cancel: CancellationToken | None,
) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Partial sum from double-precision chunks and a bound on its round-off.

    The leading terms, which carry most of the sum, are computed at the current working precision.
    The rest are generated in double precision one chunk at a time; each chunk's correctly rounded
    sum is kept together with its rounding residual and accumulated at the working precision.
    """
    head = min(terms, DOUBLE_PATH_HEAD_TERMS)
    total, head_magnitude = _multiprecision_partial_sum(shape, x, head, config, cancel)

    magnitude = 0.0
    chunks = 0
    for start in range(head, terms, config.chunk_size):
        if cancel is not None:
            cancel.raise_if_cancelled()
        stop = min(start + config.chunk_size, terms)
        index = np.arange(start, stop, dtype=np.float64)
        values = np.power(shape.step * index + shape.offset, -x)
        magnitude += math.fsum(values.tolist())
        if shape.alternating:
            values = np.where(index % 2 == 1, -values, values)
        cells = values.tolist()
        chunk_sum = math.fsum(cells)
        cells.append(-chunk_sum)
        total += mpmath.mpf(chunk_sum) + mpmath.mpf(math.fsum(cells))
        chunks += 1

    double_roundoff = FLOAT_ROUNDOFF_FACTOR * UNIT_ROUNDOFF * magnitude * (1 + UNIT_ROUNDOFF) ** 4
    accumulation_roundoff = (
        4 * (head + 2 * chunks + 2) * mpmath.eps * (head_magnitude + 2 * magnitude)
    )
    return total, double_roundoff + accumulation_roundoff


def _complete(
    shape: SeriesShape,
    x: float,
    terms: int,
    partial_sum: mpmath.mpf,
    roundoff: mpmath.mpf,
) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Add the tail estimate to a partial sum and return the value and its total bound."""
    if shape.alternating:
        return partial_sum, _tail_bound(shape, x, terms) + roundoff
    midpoint, half_width = _integral_bracket(shape, x, terms)
    return partial_sum + midpoint, half_width + roundoff


@validate_call(config={"arbitrary_types_allowed": True})
def sum_series(
    function: FunctionId,
    x: float,
    tol: PositiveFloat,
    config: NumericConfig | None = None,
    cancel: CancellationToken | None = None,
) -> SummationResult:
    """Sum a series at a real argument to within a tolerance.

    Example:
        >>> result = sum_series(FunctionId.ZETA, 2, 1e-10)
        >>> abs(float(result.value) - 1.6449340668482264) <= 1e-10
        True

    Args:
        function: Series to sum.
        x: Real argument (``x > 1``, or ``x > 0`` for the alternating series).
        tol: Required bound on the error.
        config: Numeric limits (defaults to the environment-aware configuration).
        cancel: Token checked between chunks of terms.

    Returns:
        The value, its certified bound (at most ``tol``) and the number of terms used.

    Raises:
        ToleranceUnreachableError: If a non-alternating series needs more terms than the ceiling.
    """
    config = config or NumericConfig.from_env()
    _check_domain(function, x)
    shape = function.series_shape
    tail_budget = tol / 2

    terms = _term_count(shape, x, tail_budget, config.term_ceiling)
    if terms is None:
        if shape.alternating:
            logger.info("Switching %s(%s) to the Euler transform at tol=%g", function, x, tol)
            return euler_accelerated(function, x, tol, config, cancel)
        error_message = (
            f"{function}({x}) needs more than {config.term_ceiling} terms to reach tol={tol}."
        )
        raise ToleranceUnreachableError(error_message)
    logger.debug("Summing %s(%s) directly with %d terms", function, x, terms)

    if tol >= config.high_precision_threshold:
        with mpmath.workdps(DOUBLE_PATH_DIGITS):
            partial_sum, roundoff = _float_partial_sum(shape, x, terms, config, cancel)
            value, bound = _complete(shape, x, terms, partial_sum, roundoff)
            if bound <= tol:
                return SummationResult(value, _round_up(bound), terms)
        logger.debug("Double-precision round-off too large for tol=%g; using multiprecision", tol)

    # Precision follows the tail bound at N (at most tol / 2) so the value depends only on N.
    with mpmath.workdps(30):
        tail_bound = float(_tail_bound(shape, x, terms))
    with mpmath.workdps(_working_digits(tail_bound, terms)):
        partial_sum, magnitude = _multiprecision_partial_sum(shape, x, terms, config, cancel)
        roundoff = 4 * (terms + 2) * mpmath.eps * magnitude
        value, bound = _complete(shape, x, terms, partial_sum, roundoff)
    if bound > tol:
        error_message = f"Round-off bound {bound} for {function}({x}) exceeds tol={tol}."
        raise ToleranceUnreachableError(error_message)
    return SummationResult(value, _round_up(bound), terms)


@validate_call(config={"arbitrary_types_allowed": True})
def euler_accelerated(
    function: FunctionId,
    x: float,
    tol: PositiveFloat,
    config: NumericConfig | None = None,
    cancel: CancellationToken | None = None,
) -> SummationResult:
    """Sum an alternating series with the Euler transform.

    ``sum (-1)^k a_k = sum_n ((-Delta)^n a)_0 / 2^(n+1)``. The terms ``a_k`` are completely
    monotone, so the transformed terms are positive and at least halve at every step; the rest of
    the transformed series is therefore bounded by the last included term.

    Example:
        >>> result = euler_accelerated(FunctionId.PSI, 1, 1e-12)
        >>> abs(result.value - mpmath.pi / 4) <= 1e-12, result.terms_used <= 60
        (True, True)

    Args:
        function: Alternating series to sum.
        x: Real argument, ``x > 0``.
        tol: Required bound on the error.
        config: Numeric limits (defaults to the environment-aware configuration).
        cancel: Token checked between transformed terms.

    Returns:
        The value, its certified bound and the number of transformed terms used.

    Raises:
        SeriesDomainError: If the series does not alternate.
        ToleranceUnreachableError: If more transformed terms than the configured maximum would be
            needed.
    """
    config = config or NumericConfig.from_env()
    if not function.alternating:
        error_message = f"The Euler transform needs an alternating series, got {function}."
        raise SeriesDomainError(error_message)
    _check_domain(function, x)
    shape = function.series_shape
    budget = tol / 2

    first_term = float(shape.offset) ** -x
    estimate = max(1, math.ceil(math.log2(first_term / budget)) + 1)
    if estimate > config.euler_max_terms:
        error_message = (
            f"{function}({x}) needs about {estimate} Euler terms to reach tol={tol}, "
            f"more than {config.euler_max_terms}."
        )
        raise ToleranceUnreachableError(error_message)

    with mpmath.workdps(_working_digits(tol, estimate)):
        exponent = -mpmath.mpf(x)
        differences = [
            mpmath.power(shape.step * index + shape.offset, exponent)
            for index in range(estimate + 1)
        ]
        first = differences[0]
        total = mpmath.mpf(0)
        weight = mpmath.mpf(1) / 2
        for order in range(estimate + 1):
            if cancel is not None:
                cancel.raise_if_cancelled()
            transformed = differences[0] * weight
            total += transformed
            if transformed <= budget:
                roundoff = 4 * (order + 2) * mpmath.eps * first
                bound = transformed + roundoff
                logger.debug("Euler transform of %s(%s) used %d terms", function, x, order + 1)
                return SummationResult(total, _round_up(bound), order + 1, accelerated=True)
            differences = [
                differences[index] - differences[index + 1]
                for index in range(len(differences) - 1)
            ]
            weight /= 2

    error_message = f"Euler transform of {function}({x}) did not reach tol={tol}."
    raise ToleranceUnreachableError(error_message)
