"""Tests for the certified expansions of pi and ln 2."""
from fractions import Fraction
import time

import mpmath
import pytest

from zeta_parity.numeric.constants import (
    MAX_DIGITS,
    compute_ln2,
    compute_pi,
    ln2_partial_sum,
    ln2_partial_sums,
    pi_truncated,
    render_ln2_multiple,
)


@pytest.mark.parametrize(
    ("digits", "expected"),
    [
        pytest.param(1, "3.1", id="1 digit"),
        pytest.param(10, "3.1415926535", id="10 digits"),
        pytest.param(
            50, "3.14159265358979323846264338327950288419716939937510", id="50 digits"
        ),
    ],
)
def test_known_pi_prefixes(digits: int, expected: str) -> None:
    """Test published decimal expansions of pi."""
    assert str(compute_pi(digits)) == expected


@pytest.mark.parametrize("digits", [5, 17, 64, 200])
def test_pi_is_a_prefix_of_longer_expansions(digits: int) -> None:
    """Test that more digits only extend the truncation."""
    assert str(compute_pi(digits + 10)).startswith(str(compute_pi(digits)))


@pytest.mark.integration_test()
def test_thousand_digits_from_a_cold_cache() -> None:
    """Test that a thousand digits of pi take less than five seconds."""
    pi_truncated.cache_clear()
    start = time.perf_counter()
    thousand = compute_pi(1000)
    assert time.perf_counter() - start < 5
    assert str(compute_pi(1010)).startswith(str(thousand))


def test_pi_truncation_brackets_pi() -> None:
    """Test that pi lies in [value, value + 10^-d)."""
    approximation = compute_pi(80)
    with mpmath.workdps(120):
        pi = mpmath.pi
        assert mpmath.mpf(approximation.value.numerator) / approximation.value.denominator <= pi
        upper = approximation.value + Fraction(1, 10**80)
        assert pi < mpmath.mpf(upper.numerator) / upper.denominator


def test_known_ln2() -> None:
    """Test a published expansion of ln 2."""
    assert str(compute_ln2(30)) == "0.693147180559945309417232121458"


@pytest.mark.parametrize("digits", [0, MAX_DIGITS + 1])
def test_digit_range_is_enforced(digits: int) -> None:
    """Test that digit counts outside [1, MAX_DIGITS] are rejected."""
    with pytest.raises(ValueError):  # noqa: PT011
        compute_pi(digits)
    with pytest.raises(ValueError):  # noqa: PT011
        compute_ln2(digits)


def test_ln2_multiple_is_rounded_with_certified_bound() -> None:
    """Test half of ln 2, rounded to 12 decimals."""
    rounded = render_ln2_multiple(Fraction(1, 2), 12)
    assert rounded.error_bound <= Fraction(1, 10**12)
    with mpmath.workdps(40):
        exact = mpmath.log(2) / 2
        assert abs(mpmath.mpf(rounded.value.numerator) / rounded.value.denominator - exact) <= (
            mpmath.mpf(10) ** -12
        )


class TestLn2PartialSums:
    """Exact partial sums of the alternating harmonic series."""

    def test_first_sums(self) -> None:
        """Test 1, 1/2, 5/6 and 7/12."""
        assert [ln2_partial_sum(n).value for n in range(4)] == [
            Fraction(1),
            Fraction(1, 2),
            Fraction(5, 6),
            Fraction(7, 12),
        ]

    def test_stream_matches_single_sums(self) -> None:
        """Test that the incremental stream agrees with direct evaluation."""
        assert list(ln2_partial_sums(30)) == [ln2_partial_sum(n) for n in range(31)]

    @pytest.mark.parametrize("n", [0, 1, 10, 99, 1000])
    def test_bound_holds(self, n: int) -> None:
        """Test that ln 2 lies within the bound of each partial sum."""
        partial = ln2_partial_sum(n)
        ln2 = compute_ln2(40)
        assert abs(partial.value - ln2.value) <= partial.bound + ln2.error_bound

    @pytest.mark.integration_test()
    def test_bound_holds_up_to_ten_thousand(self) -> None:
        """Test the bound for every partial sum with n <= 10^4."""
        ln2 = compute_ln2(40)
        for partial in ln2_partial_sums(10_000):
            assert abs(partial.value - ln2.value) <= partial.bound + ln2.error_bound

    def test_sums_alternate_around_ln2(self) -> None:
        """Test that even partial sums lie above ln 2 and odd ones below."""
        ln2 = compute_ln2(30).value
        for partial in ln2_partial_sums(20):
            above = partial.value > ln2
            assert above == (partial.bound.denominator % 2 == 0)

    def test_negative_count_raises(self) -> None:
        """Test that a negative index is rejected."""
        with pytest.raises(ValueError):  # noqa: PT011
            ln2_partial_sum(-1)
