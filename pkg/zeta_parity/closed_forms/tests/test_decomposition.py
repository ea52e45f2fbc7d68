"""Tests for the even/odd denominator decomposition."""
from fractions import Fraction

import pytest

from zeta_parity.closed_forms.decomposition import (
    IdentityStatus,
    IdentityViolationError,
    decompose,
)
from zeta_parity.closed_forms.evaluation import Evaluation, ExactPi, Open, evaluate
from zeta_parity.closed_forms.function_id import FunctionId
from zeta_parity.core.pi_value import PiValue


@pytest.mark.parametrize("n", range(2, 31, 2))
def test_identities_hold_exactly_at_even_arguments(n: int) -> None:
    """Test alpha + beta = zeta and beta - alpha = xi in Q[pi]."""
    record = decompose(n)
    assert record.sum_identity == IdentityStatus.HOLDS
    assert record.difference_identity == IdentityStatus.HOLDS


def test_values_at_two() -> None:
    """Test the four closed forms at 2."""
    record = decompose(2)
    assert record.zeta == ExactPi(PiValue.monomial(Fraction(1, 6), 2))
    assert record.alpha == ExactPi(PiValue.monomial(Fraction(1, 24), 2))
    assert record.beta == ExactPi(PiValue.monomial(Fraction(1, 8), 2))
    assert record.xi == ExactPi(PiValue.monomial(Fraction(1, 12), 2))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_arguments_are_unevaluated(n: int) -> None:
    """Test that identities between open values are recorded but not evaluated."""
    record = decompose(n)
    assert isinstance(record.zeta, Open)
    assert record.sum_identity == IdentityStatus.UNEVALUATED
    assert record.difference_identity == IdentityStatus.UNEVALUATED


def test_argument_below_two_raises() -> None:
    """Test that arguments where zeta diverges are rejected."""
    with pytest.raises(ValueError):  # noqa: PT011
        decompose(1)


def test_violation_is_reported(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test that a wrong closed form breaks the identity loudly."""

    def wrong_beta(function: FunctionId, n: int) -> Evaluation:
        if function is FunctionId.BETA:
            return ExactPi(PiValue.monomial(Fraction(1, 7), n))
        return evaluate(function, n)

    monkeypatch.setattr("zeta_parity.closed_forms.decomposition.evaluate", wrong_beta)
    with pytest.raises(IdentityViolationError, match=r"alpha \+ beta = zeta"):
        decompose(2)
