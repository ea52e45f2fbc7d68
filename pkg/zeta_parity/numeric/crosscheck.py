"""Cross-checks of closed forms against certified numeric summation."""
from dataclasses import dataclass
import logging
import math
from typing import Any, Final, final

import mpmath
from pydantic import NonNegativeInt, PositiveFloat, validate_call

from zeta_parity.closed_forms.evaluation import Evaluation, ExactPi, Log2Multiple, evaluate
from zeta_parity.closed_forms.function_id import FunctionId
from zeta_parity.core.fixed_decimal import FixedDecimal
from zeta_parity.core.rendering import render_decimal
from zeta_parity.numeric.cancellation import CancellationToken
from zeta_parity.numeric.config import NumericConfig
from zeta_parity.numeric.constants import render_ln2_multiple
from zeta_parity.numeric.series import sum_series


logger = logging.getLogger(__name__)

CLOSED_FORM_GUARD_DIGITS: Final[int] = 6
"""Decimals printed beyond the tolerance in the numeric column."""

CLOSED_FORM_REFERENCE_DIGITS: Final[int] = 60
"""Decimals of the closed form that gaps are measured against, whatever the tolerance."""

GAP_SIGNIFICANT_DIGITS: Final[int] = 4
"""Significant digits of a reported gap, which is rounded up to them."""


def closed_form_decimal(evaluation: Evaluation, digits: int) -> FixedDecimal:
    """Round a resolved value to the given number of decimals.

    Example:
        >>> from fractions import Fraction
        >>> str(closed_form_decimal(Log2Multiple(Fraction(1)), 15))
        '0.693147180559945'

    Args:
        evaluation: Exact value in Q[pi] or multiple of ln 2.
        digits: Decimals to keep.

    Returns:
        The rounded value, with error bound at most ``10^-digits``.

    Raises:
        ValueError: If the value is divergent or open.
    """
    match evaluation:
        case ExactPi(value):
            return render_decimal(value, digits)
        case Log2Multiple(coefficient):
            return render_ln2_multiple(coefficient, digits)
        case _:
            error_message = f"A value tagged {evaluation} has no decimal expansion."
            raise ValueError(error_message)


@final
@dataclass(frozen=True)
class CrosscheckReport:
    """Comparison of a closed form with the numeric sum of its series."""

    function: FunctionId
    n: int
    closed_form: str
    """Exact value, in canonical form."""

    numeric: str
    """Numeric sum, printed with the tolerance's digits plus guard digits."""

    gap: float
    """Distance from the numeric sum to the closed form, rounded up to four significant digits."""

    terms_used: int
    passed: bool

    def to_csv_row(self) -> list[str]:
        """Fields in the order ``function, n, closed_form, numeric, gap, terms, pass|fail``.

        Returns:
            The row.
        """
        return [
            str(self.function),
            str(self.n),
            self.closed_form,
            self.numeric,
            f"{self.gap:.3e}",
            str(self.terms_used),
            "pass" if self.passed else "fail",
        ]

    def to_dict(self) -> dict[str, Any]:
        """Plain-data form of the report, with the same columns as `to_csv_row`.

        Returns:
            Field names mapped to JSON-compatible values.
        """
        return {
            "function": str(self.function),
            "n": self.n,
            "closed_form": self.closed_form,
            "numeric": self.numeric,
            "gap": self.gap,
            "terms": self.terms_used,
            "status": "pass" if self.passed else "fail",
        }


def _reference_value(evaluation: ExactPi | Log2Multiple, digits: int) -> mpmath.mpf:
    """Closed form at the current working precision, from its rounding to ``digits`` decimals."""
    rounded = closed_form_decimal(evaluation, digits)
    return mpmath.mpf(rounded.mantissa) / mpmath.mpf(10) ** rounded.scale


def _round_gap_up(gap: mpmath.mpf) -> float:
    if not gap:
        return 0.0
    exponent = int(mpmath.floor(mpmath.log10(gap))) - (GAP_SIGNIFICANT_DIGITS - 1)
    units = int(mpmath.ceil(gap / mpmath.mpf(10) ** exponent))
    return float(f"{units}e{exponent}")


@validate_call(config={"arbitrary_types_allowed": True})
def crosscheck(
    function: FunctionId,
    n: NonNegativeInt,
    tol: PositiveFloat,
    config: NumericConfig | None = None,
    cancel: CancellationToken | None = None,
) -> CrosscheckReport:
    """Compare the closed form of a resolved value with a certified numeric sum.

    The series is summed to ``tol / 2`` and compared with the closed form to at least sixty
    decimals, so the reported gap reflects only the numeric sum. The check passes when the gap,
    rounded up to four significant digits, is at most ``tol``.

    Example:
        >>> report = crosscheck(FunctionId.PSI, 3, 1e-10)
        >>> report.closed_form, report.passed
        ('1/32 * pi^3', True)

    Args:
        function: Series to check.
        n: Argument.
        tol: Allowed distance between the closed form and the numeric sum.
        config: Numeric limits (defaults to the environment-aware configuration).
        cancel: Token checked during summation.

    Returns:
        The report, with ``passed`` false when the values disagree.

    Raises:
        ValueError: If the value at ``n`` has no closed form.
    """
    evaluation = evaluate(function, n)
    if not isinstance(evaluation, ExactPi | Log2Multiple):
        error_message = f"{function}({n}) is {evaluation}; only resolved values can be checked."
        raise ValueError(error_message)  # noqa: TRY004

    display_digits = math.ceil(-math.log10(tol)) + CLOSED_FORM_GUARD_DIGITS
    reference_digits = max(CLOSED_FORM_REFERENCE_DIGITS, display_digits + CLOSED_FORM_GUARD_DIGITS)
    result = sum_series(function, n, tol / 2, config, cancel)

    with mpmath.workdps(reference_digits + CLOSED_FORM_GUARD_DIGITS):
        gap = _round_gap_up(abs(result.value - _reference_value(evaluation, reference_digits)))
        numeric = mpmath.nstr(result.value, display_digits, strip_zeros=False)
    passed = gap <= tol
    if not passed:
        logger.warning("Crosscheck failed for %s(%d): gap %g > tol %g", function, n, gap, tol)

    closed_form = str(evaluation.value) if isinstance(evaluation, ExactPi) else str(evaluation)
    return CrosscheckReport(
        function, n, closed_form, numeric, gap, result.terms_used, passed=passed
    )
