"""Parity typology of (series, argument) pairs.

Each pair is described by the parity of the argument, the parity of the integers whose inverse
powers are summed, whether the series alternates, and whether its value is resolved, open or
divergent. Resolved even arguments come from even periodizations of even-degree polynomials;
resolved odd arguments of the alternating odd-denominator series come from odd periodizations of
odd-degree polynomials.
"""
from dataclasses import asdict, dataclass
from enum import auto
from typing import Any, final

from pydantic import NonNegativeInt, validate_call
from strenum import LowercaseStrEnum

from zeta_parity.closed_forms.evaluation import (
    Divergent,
    Evaluation,
    ExactPi,
    Log2Multiple,
    Open,
    evaluate,
)
from zeta_parity.closed_forms.function_id import FunctionId


class Parity(LowercaseStrEnum):
    """Parity of an integer."""

    EVEN = auto()
    """Divisible by two."""

    ODD = auto()
    """Not divisible by two."""


class DenominatorParity(LowercaseStrEnum):
    """Parity of the integers whose inverse powers a series sums."""

    EVEN = auto()
    """Only even integers (alpha, phi)."""

    ODD = auto()
    """Only odd integers (beta, psi)."""

    MIXED = auto()
    """All positive integers (zeta, xi)."""


class ResolutionStatus(LowercaseStrEnum):
    """Whether a closed form is known."""

    RESOLVED = auto()
    """A rational multiple of a power of pi, or of ln 2."""

    OPEN = auto()
    """The series converges but no closed form is known."""

    DIVERGENT = auto()
    """The argument is outside the domain of convergence."""


class ResolutionMethod(LowercaseStrEnum):
    """How a resolved value is obtained."""

    EVEN_PERIODIZATION = auto()
    """Even periodic extension of an even-degree polynomial on [0, pi]."""

    ODD_PERIODIZATION = auto()
    """Odd periodic extension of an odd-degree polynomial on [0, pi]."""

    LOGARITHM_SERIES = auto()
    """Alternating harmonic series for ln 2 (no Fourier argument)."""

    NONE = auto()
    """Not resolved."""


_DENOMINATOR_PARITY: dict[FunctionId, DenominatorParity] = {
    FunctionId.ZETA: DenominatorParity.MIXED,
    FunctionId.ALPHA: DenominatorParity.EVEN,
    FunctionId.BETA: DenominatorParity.ODD,
    FunctionId.XI: DenominatorParity.MIXED,
    FunctionId.PHI: DenominatorParity.EVEN,
    FunctionId.PSI: DenominatorParity.ODD,
}


@final
@dataclass(frozen=True)
class TypologyRecord:
    """Classification of one (series, argument) pair."""

    function: FunctionId
    argument: int
    argument_parity: Parity
    denominators: DenominatorParity
    alternating: bool
    status: ResolutionStatus
    method: ResolutionMethod

    def to_dict(self) -> dict[str, Any]:
        """Flat mapping of the fields (enums as their string values)."""
        return {
            key: str(value) if isinstance(value, LowercaseStrEnum) else value
            for key, value in asdict(self).items()
        }

    def __str__(self) -> str:
        """Typology line, e.g. ``arg=even denom=odd alternating=yes status=open``."""
        alternating = "yes" if self.alternating else "no"
        return (
            f"arg={self.argument_parity} denom={self.denominators} "
            f"alternating={alternating} status={self.status}"
        )


def _status_and_method(
    function: FunctionId, evaluation: Evaluation
) -> tuple[ResolutionStatus, ResolutionMethod]:
    match evaluation:
        case ExactPi():
            if function is FunctionId.PSI:
                return ResolutionStatus.RESOLVED, ResolutionMethod.ODD_PERIODIZATION
            return ResolutionStatus.RESOLVED, ResolutionMethod.EVEN_PERIODIZATION
        case Log2Multiple():
            return ResolutionStatus.RESOLVED, ResolutionMethod.LOGARITHM_SERIES
        case Divergent():
            return ResolutionStatus.DIVERGENT, ResolutionMethod.NONE
        case Open():
            return ResolutionStatus.OPEN, ResolutionMethod.NONE


@validate_call
def classify(function: FunctionId, n: NonNegativeInt) -> TypologyRecord:
    """Classify a (series, argument) pair.

    Example:
        >>> print(classify(FunctionId.PSI, 4))
        arg=even denom=odd alternating=yes status=open
        >>> print(classify(FunctionId.ALPHA, 2))
        arg=even denom=even alternating=no status=resolved

    Args:
        function: Series.
        n: Argument.

    Returns:
        The typology record; its status always matches `evaluate`.
    """
    status, method = _status_and_method(function, evaluate(function, n))
    return TypologyRecord(
        function=function,
        argument=n,
        argument_parity=Parity.EVEN if n % 2 == 0 else Parity.ODD,
        denominators=_DENOMINATOR_PARITY[function],
        alternating=function.alternating,
        status=status,
        method=method,
    )
