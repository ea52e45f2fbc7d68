"""Tests for exact arithmetic in Q[pi]."""
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st
import mpmath
import pytest

from zeta_parity.core.pi_value import PI, ZERO, PiExponentError, PiValue, pi_divide


small_fractions = st.fractions(max_denominator=50).filter(lambda value: abs(value) < 1000)
pi_values = st.dictionaries(
    st.integers(min_value=-1, max_value=6), small_fractions, max_size=4
).map(PiValue)


@pytest.mark.parametrize(
    ("value", "expected"),
    [
        pytest.param(PiValue.monomial(Fraction(1, 6), 2), "1/6 * pi^2", id="zeta two"),
        pytest.param(PiValue({1: 2, 0: 3}), "2 * pi + 3", id="two terms"),
        pytest.param(PiValue({1: Fraction(-1, 4), 0: -2}), "-1/4 * pi - 2", id="negative"),
        pytest.param(PiValue({0: 2, -1: 3}), "2 + 3 * pi^-1", id="inverse pi"),
        pytest.param(PiValue(), "0", id="zero"),
        pytest.param(PI, "1 * pi", id="pi"),
    ],
)
def test_canonical_rendering(value: PiValue, expected: str) -> None:
    """Test the canonical string form and that it parses back."""
    assert str(value) == expected
    assert PiValue.parse(expected) == value


def test_zero_coefficients_are_dropped() -> None:
    """Test that zero terms do not appear in the canonical terms."""
    value = PiValue({3: 0, 1: Fraction(1, 2)})
    assert value.exponents == (1,)
    assert value.coefficient(3) == 0


def test_exponent_below_minus_one_raises() -> None:
    """Test that pi^-2 cannot be represented."""
    with pytest.raises(PiExponentError):
        PiValue({-2: 1})


def test_dividing_by_pi_twice_raises() -> None:
    """Test that dividing a value with a pi^-1 term by pi raises."""
    once = pi_divide(PiValue.rational(1))
    assert once == PiValue.monomial(1, -1)
    with pytest.raises(PiExponentError):
        pi_divide(once)


def test_division_by_zero_raises() -> None:
    """Test that dividing by a zero rational raises."""
    with pytest.raises(ZeroDivisionError):
        PI / 0


def test_product_collects_exponents() -> None:
    """Test that (pi + 1)^2 expands to pi^2 + 2 pi + 1."""
    assert (PI + 1) ** 2 == PiValue({2: 1, 1: 2, 0: 1})


def test_equality_is_coefficient_wise() -> None:
    """Test that values are equal exactly when all coefficients are."""
    assert PiValue.rational(1) != PiValue.monomial(1, 1)
    assert PiValue({2: Fraction(2, 4)}) == PiValue.monomial(Fraction(1, 2), 2)
    assert hash(PiValue({2: Fraction(2, 4)})) == hash(PiValue.monomial(Fraction(1, 2), 2))


@pytest.mark.parametrize(
    "text",
    [
        pytest.param("pi^2", id="missing coefficient"),
        pytest.param("2/4 * pi", id="unreduced"),
        pytest.param("3 + 2 * pi", id="wrong order"),
        pytest.param("1 * pi + 1 * pi", id="duplicate exponent"),
    ],
)
def test_parse_rejects_non_canonical_text(text: str) -> None:
    """Test that only canonical renderings parse."""
    with pytest.raises(ValueError):  # noqa: PT011
        PiValue.parse(text)


def test_interval_encloses_value() -> None:
    """Test the enclosure of pi^2/6 from a decimal enclosure of pi."""
    value = PiValue({2: Fraction(1, 6), -1: 1})
    lower, upper = value.interval(Fraction(314159, 100000), Fraction(314160, 100000))
    with mpmath.workdps(30):
        true_value = mpmath.pi**2 / 6 + 1 / mpmath.pi
        assert mpmath.mpf(lower.numerator) / lower.denominator <= true_value
        assert true_value <= mpmath.mpf(upper.numerator) / upper.denominator


def test_float_evaluation() -> None:
    """Test the double-precision value of pi^2/6."""
    assert PiValue.monomial(Fraction(1, 6), 2).to_float() == pytest.approx(1.6449340668482264)
    assert ZERO.to_float() == 0


class TestRingLaws:
    """Ring laws on random values."""

    @given(first=pi_values, second=pi_values)
    @settings(max_examples=50)
    def test_addition_commutes(self, first: PiValue, second: PiValue) -> None:
        """Test that a + b = b + a."""
        assert first + second == second + first

    @given(first=pi_values, second=pi_values, third=pi_values)
    @settings(max_examples=50)
    def test_multiplication_distributes(
        self, first: PiValue, second: PiValue, third: PiValue
    ) -> None:
        """Test that a (b + c) = ab + ac when no exponent falls below -1."""
        try:
            product = first * (second + third)
            expanded = first * second + first * third
        except PiExponentError:
            return
        assert product == expanded

    @given(value=pi_values)
    @settings(max_examples=50)
    def test_subtracting_itself_gives_zero(self, value: PiValue) -> None:
        """Test that a - a is the zero value."""
        assert not value - value

    @given(value=pi_values)
    @settings(max_examples=50)
    def test_rendering_round_trips(self, value: PiValue) -> None:
        """Test that every value parses back from its rendering."""
        assert PiValue.parse(str(value)) == value
