"""Closed-form values of the six series at natural numbers.

At even arguments the first five series are rational multiples of the matching power of pi; the
alternating odd-denominator series is one at odd arguments. At 1 the two alternating series with
all or even denominators are rational multiples of ln 2 and the other three diverge. Every other
case is open.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeAlias, final

from pydantic import NonNegativeInt, validate_call

from zeta_parity.closed_forms.function_id import FunctionId
from zeta_parity.coefficients.cache import CoefficientCache
from zeta_parity.coefficients.sequences import coeff_a, coeff_b, coeff_c
from zeta_parity.core.pi_value import PiExponentError, PiValue


ZETA_THREE_NOTE = "irrational (proved in 1978); no closed form in powers of pi is known"
"""Metadata attached to the open value at ``(zeta, 3)``."""


@final
@dataclass(frozen=True)
class ExactPi:
    """Rational multiple of a power of pi."""

    value: PiValue

    def __str__(self) -> str:
        """Canonical rendering of the value."""
        return str(self.value)


@final
@dataclass(frozen=True)
class Log2Multiple:
    """Rational multiple of ln 2."""

    coefficient: Fraction

    def __str__(self) -> str:
        """Tag and coefficient, e.g. ``ln2-multiple 1/2``."""
        return f"ln2-multiple {self.coefficient}"


@final
@dataclass(frozen=True)
class Divergent:
    """Argument outside the series' domain of convergence."""

    def __str__(self) -> str:
        """Tag."""
        return "divergent"


@final
@dataclass(frozen=True)
class Open:
    """No closed form is known."""

    note: str | None = None
    """Optional remark on what is known about the value."""

    def __str__(self) -> str:
        """Tag."""
        return "open"


Evaluation: TypeAlias = ExactPi | Log2Multiple | Divergent | Open
"""Outcome of evaluating a series at a natural number."""


def _exact(coefficient: Fraction, n: int) -> ExactPi:
    value = PiValue.monomial(coefficient, n)
    if value.exponents != (n,):
        error_message = f"Closed form {value} should be a single non-zero multiple of pi^{n}."
        raise PiExponentError(error_message)
    return ExactPi(value)


def _even_coefficient(function: FunctionId, p: int, cache: CoefficientCache | None) -> Fraction:
    match function:
        case FunctionId.ZETA:
            return coeff_b(p, cache)
        case FunctionId.ALPHA:
            return coeff_b(p, cache) / 4**p
        case FunctionId.BETA:
            return Fraction(4**p - 1, 4**p) * coeff_b(p, cache)
        case FunctionId.XI:
            return coeff_a(p, cache)
        case FunctionId.PHI:
            return coeff_a(p, cache) / 4**p
        case FunctionId.PSI:
            error_message = "psi has no closed form at even arguments."
            raise ValueError(error_message)


@validate_call(config={"arbitrary_types_allowed": True})
def evaluate(
    function: FunctionId, n: NonNegativeInt, cache: CoefficientCache | None = None
) -> Evaluation:
    """Evaluate a series at a natural number.

    Example:
        >>> print(evaluate(FunctionId.ZETA, 2))
        1/6 * pi^2
        >>> print(evaluate(FunctionId.BETA, 4))
        1/96 * pi^4
        >>> print(evaluate(FunctionId.PHI, 1))
        ln2-multiple 1/2
        >>> print(evaluate(FunctionId.ZETA, 3))
        open

    Args:
        function: Series to evaluate.
        n: Argument.
        cache: Coefficient cache (defaults to the shared one).

    Returns:
        The exact value, a multiple of ln 2, or the divergent or open tag.
    """
    if n == 0:
        return Divergent()

    if n == 1:
        match function:
            case FunctionId.XI:
                return Log2Multiple(Fraction(1))
            case FunctionId.PHI:
                return Log2Multiple(Fraction(1, 2))
            case FunctionId.PSI:
                return _exact(coeff_c(0, cache), 1)
            case FunctionId.ZETA | FunctionId.ALPHA | FunctionId.BETA:
                return Divergent()

    if function is FunctionId.PSI:
        if n % 2 == 1:
            return _exact(coeff_c((n - 1) // 2, cache), n)
        return Open()

    if n % 2 == 0:
        return _exact(_even_coefficient(function, n // 2, cache), n)

    return Open(ZETA_THREE_NOTE if (function, n) == (FunctionId.ZETA, 3) else None)
