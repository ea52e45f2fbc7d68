"""Tests for decimals with certified error bounds."""
from fractions import Fraction

import pytest

from zeta_parity.core.fixed_decimal import FixedDecimal


@pytest.mark.parametrize(
    ("decimal", "expected"),
    [
        pytest.param(FixedDecimal(31415926535, 10), "3.1415926535", id="pi"),
        pytest.param(FixedDecimal(-25, 2), "-0.25", id="negative fraction"),
        pytest.param(FixedDecimal(5, 3), "0.005", id="leading zeros"),
        pytest.param(FixedDecimal(0, 3), "0.000", id="zero"),
        pytest.param(FixedDecimal(42, 0), "42", id="integer"),
    ],
)
def test_rendering(decimal: FixedDecimal, expected: str) -> None:
    """Test the plain decimal string."""
    assert str(decimal) == expected


def test_negative_scale_raises() -> None:
    """Test that a negative scale is rejected."""
    with pytest.raises(ValueError, match="Scale"):
        FixedDecimal(1, -1)


def test_negative_error_bound_raises() -> None:
    """Test that a negative error bound is rejected."""
    with pytest.raises(ValueError, match="Error bound"):
        FixedDecimal(1, 1, Fraction(-1, 10))


def test_from_interval_rounds_midpoint() -> None:
    """Test that the midpoint is rounded and the bound covers the whole enclosure."""
    lower, upper = Fraction(1, 3) - Fraction(1, 10**9), Fraction(1, 3) + Fraction(1, 10**9)
    rounded = FixedDecimal.from_interval(lower, upper, 4)
    assert str(rounded) == "0.3333"
    assert rounded.contains(lower)
    assert rounded.contains(upper)
    assert rounded.error_bound <= Fraction(1, 10**4)


def test_from_empty_interval_raises() -> None:
    """Test that an enclosure with lower above upper is rejected."""
    with pytest.raises(ValueError, match="Empty enclosure"):
        FixedDecimal.from_interval(Fraction(1), Fraction(0), 3)


def test_arithmetic_accumulates_error_bounds() -> None:
    """Test addition at mixed scales and integer scaling."""
    first = FixedDecimal(12, 1, Fraction(1, 100))
    second = FixedDecimal(345, 2, Fraction(1, 1000))

    summed = first + second
    assert str(summed) == "4.65"
    assert summed.error_bound == Fraction(11, 1000)

    difference = first - second
    assert str(difference) == "-2.25"

    tripled = second * -3
    assert str(tripled) == "-10.35"
    assert tripled.error_bound == Fraction(3, 1000)


def test_rescaling_to_fewer_digits_raises() -> None:
    """Test that rescaling cannot drop digits."""
    assert str(FixedDecimal(5, 1).rescaled(3)) == "0.500"
    with pytest.raises(ValueError, match="rescale"):
        FixedDecimal(5, 3).rescaled(1)
