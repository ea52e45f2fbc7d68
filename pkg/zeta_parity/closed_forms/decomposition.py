"""Splitting zeta and xi into their even- and odd-denominator halves.

For every argument where the series converge, ``alpha + beta = zeta`` (all integers are even or
odd) and ``beta - alpha = xi`` (odd terms of xi are positive, even terms negative).
"""
from dataclasses import dataclass
from enum import auto
from typing import Annotated, final

from pydantic import Field, validate_call
from strenum import LowercaseStrEnum

from zeta_parity.closed_forms.evaluation import Evaluation, ExactPi, evaluate
from zeta_parity.closed_forms.function_id import FunctionId
from zeta_parity.core.pi_value import PiValue


class IdentityViolationError(ArithmeticError):
    """An exact identity between closed forms does not hold."""

    def __init__(self, message: str = "Closed forms violate an exact identity.") -> None:
        """Initialise the identity violation error.

        Args:
            message: Error message.
        """
        super().__init__(message)


class IdentityStatus(LowercaseStrEnum):
    """Outcome of checking an identity between closed forms."""

    HOLDS = auto()
    """Every side has a closed form and the identity holds exactly."""

    UNEVALUATED = auto()
    """At least one side is open, so the identity is recorded but not evaluated."""


@final
@dataclass(frozen=True)
class DecompositionRecord:
    """The two decomposition identities at one argument."""

    n: int
    zeta: Evaluation
    alpha: Evaluation
    beta: Evaluation
    xi: Evaluation
    sum_identity: IdentityStatus
    """Status of ``alpha(n) + beta(n) = zeta(n)``."""

    difference_identity: IdentityStatus
    """Status of ``beta(n) - alpha(n) = xi(n)``."""


def _check(name: str, left: PiValue, right: PiValue) -> IdentityStatus:
    if left != right:
        error_message = f"{name} fails exactly: {left} != {right}."
        raise IdentityViolationError(error_message)
    return IdentityStatus.HOLDS


@validate_call
def decompose(n: Annotated[int, Field(ge=2)]) -> DecompositionRecord:
    """Check ``alpha + beta = zeta`` and ``beta - alpha = xi`` at an argument.

    Example:
        >>> record = decompose(2)
        >>> print(record.alpha, "+", record.beta, "=", record.zeta)
        1/24 * pi^2 + 1/8 * pi^2 = 1/6 * pi^2
        >>> print(record.sum_identity, decompose(3).sum_identity)
        holds unevaluated

    Args:
        n: Argument, at least 2 so that all four series converge.

    Returns:
        The four evaluations and the status of both identities.

    Raises:
        IdentityViolationError: If all values are exact and an identity fails.
    """
    zeta = evaluate(FunctionId.ZETA, n)
    alpha = evaluate(FunctionId.ALPHA, n)
    beta = evaluate(FunctionId.BETA, n)
    xi = evaluate(FunctionId.XI, n)

    match zeta, alpha, beta, xi:
        case ExactPi(zeta_value), ExactPi(alpha_value), ExactPi(beta_value), ExactPi(xi_value):
            sum_identity = _check("alpha + beta = zeta", alpha_value + beta_value, zeta_value)
            difference_identity = _check("beta - alpha = xi", beta_value - alpha_value, xi_value)
        case _:
            sum_identity = difference_identity = IdentityStatus.UNEVALUATED

    return DecompositionRecord(
        n=n,
        zeta=zeta,
        alpha=alpha,
        beta=beta,
        xi=xi,
        sum_identity=sum_identity,
        difference_identity=difference_identity,
    )
