"""Tests for decimal rendering of values in Q[pi]."""
from fractions import Fraction

import mpmath
import pytest

from zeta_parity.core.pi_value import PiValue
from zeta_parity.core.rendering import render_decimal


@pytest.mark.parametrize(
    ("value", "digits", "expected"),
    [
        pytest.param(PiValue.monomial(Fraction(1, 6), 2), 10, "1.6449340668", id="zeta two"),
        pytest.param(
            PiValue.monomial(Fraction(1, 6), 2), 15, "1.644934066848226", id="zeta two 15"
        ),
        pytest.param(PiValue.monomial(Fraction(1, 4), 1), 15, "0.785398163397448", id="pi/4"),
        pytest.param(PiValue.monomial(Fraction(7, 720), 4), 8, "0.94703283", id="xi four"),
        pytest.param(PiValue.monomial(Fraction(1, 32), 3), 12, "0.968946146259", id="psi three"),
        pytest.param(
            PiValue.monomial(Fraction(5, 1536), 5), 12, "0.996157828077", id="psi five"
        ),
        pytest.param(PiValue({1: -1, 0: 3}), 6, "-0.141593", id="negative"),
    ],
)
def test_known_renderings(value: PiValue, digits: int, expected: str) -> None:
    """Test renderings of known constants."""
    assert str(render_decimal(value, digits)) == expected


@pytest.mark.parametrize("digits", [1, 5, 20, 60])
def test_rendering_is_within_error_bound(digits: int) -> None:
    """Test that a mixed value is within its certified bound of an independent evaluation."""
    value = PiValue({4: Fraction(-3, 7), 1: Fraction(1, 9), -1: 2})
    rendered = render_decimal(value, digits)
    assert rendered.error_bound <= Fraction(1, 10**digits)

    with mpmath.workdps(digits + 30):
        reference = -3 * mpmath.pi**4 / 7 + mpmath.pi / 9 + 2 / mpmath.pi
        gap = abs(mpmath.mpf(rendered.mantissa) / mpmath.mpf(10) ** digits - reference)
        assert gap <= mpmath.mpf(10) ** -digits


def test_zero_renders_exactly() -> None:
    """Test that zero has no error."""
    rendered = render_decimal(PiValue(), 4)
    assert str(rendered) == "0.0000"
    assert rendered.error_bound == 0


def test_non_positive_digits_raise() -> None:
    """Test that zero decimals are rejected."""
    with pytest.raises(ValueError):  # noqa: PT011
        render_decimal(PiValue.rational(1), 0)
