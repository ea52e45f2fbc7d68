"""Tests for the public coefficient accessors."""
from collections.abc import Callable
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from zeta_parity.coefficients.cache import CoefficientCache
from zeta_parity.coefficients.sequences import (
    DEFAULT_CACHE,
    bridge_b_from_a,
    coeff_a,
    coeff_b,
    coeff_c,
)


def test_base_cases() -> None:
    """Test the three base cases."""
    assert coeff_a(1) == Fraction(1, 12)
    assert coeff_b(1) == Fraction(1, 6)
    assert coeff_c(0) == Fraction(1, 4)


@pytest.mark.parametrize("p", range(1, 51))
def test_bridge_agrees_with_b_recurrence(p: int) -> None:
    """Test B_p (4^p - 2) = 4^p A_p for p up to 50."""
    assert bridge_b_from_a(p) == coeff_b(p)


def test_signs_and_denominators() -> None:
    """Test that all coefficients are positive and C_p has an even denominator."""
    for p in range(1, 20):
        for value in (coeff_a(p), coeff_b(p), coeff_c(p)):
            assert value > 0
    assert coeff_c(20).denominator % 2 == 0


def test_explicit_cache_is_used() -> None:
    """Test that passing a cache fills that cache rather than the shared one."""
    own = CoefficientCache()
    coeff_c(6, own)
    assert own.sizes == (0, 0, 7)
    assert coeff_c(6, own) == coeff_c(6)
    assert DEFAULT_CACHE is not own


@given(p=st.integers(min_value=1, max_value=30))
@settings(max_examples=20)
def test_coefficients_decrease(p: int) -> None:
    """Test that the sequences decrease, B by a factor of more than pi^2 > 9."""
    assert coeff_b(p + 1) / coeff_b(p) < Fraction(1, 9)
    assert coeff_a(p + 1) < coeff_a(p)
    assert coeff_c(p) < coeff_c(p - 1)


@pytest.mark.parametrize(
    ("accessor", "index"),
    [
        pytest.param(coeff_a, 0, id="A_0"),
        pytest.param(coeff_b, 0, id="B_0"),
        pytest.param(coeff_c, -1, id="C_-1"),
    ],
)
def test_out_of_domain_indices_raise(accessor: Callable[[int], Fraction], index: int) -> None:
    """Test that indices outside each sequence's domain are rejected."""
    with pytest.raises(ValueError):  # noqa: PT011
        accessor(index)
