"""Dense polynomials in t with rational or pi-valued coefficients."""
from abc import ABC, abstractmethod
from collections.abc import Iterable
from fractions import Fraction
import math
from typing import Final, Generic, Self, TypeVar, final

from zeta_parity.core.pi_value import PI, PiValue, Scalar


ZERO_POLYNOMIAL_DEGREE: Final[float] = -math.inf
"""Degree of the zero polynomial (never the integer 0)."""

CoefficientT = TypeVar("CoefficientT", Fraction, PiValue)


class DensePolynomial(ABC, Generic[CoefficientT]):
    """Polynomial stored as its coefficient sequence (index = power of t).

    The trailing coefficient is always non-zero, so the zero polynomial has no coefficients.
    Values are immutable after construction.
    """

    __slots__ = ("_coefficients",)

    _coefficients: tuple[CoefficientT, ...]

    def __init__(self, coefficients: Iterable[CoefficientT | Scalar] = ()) -> None:
        """Initialise the polynomial.

        Args:
            coefficients: Coefficients from the constant term upwards. Trailing zeros are dropped.
        """
        converted = [self._coerce(coefficient) for coefficient in coefficients]
        while converted and not converted[-1]:
            converted.pop()
        self._coefficients = tuple(converted)

    @staticmethod
    @abstractmethod
    def _coerce(value: "CoefficientT | Scalar") -> CoefficientT:
        """Convert a scalar into the coefficient type."""

    @classmethod
    def monomial(cls, degree: int, coefficient: CoefficientT | Scalar = 1) -> Self:
        """Single term ``coefficient * t^degree``.

        Args:
            degree: Power of t.
            coefficient: Coefficient of the term.

        Returns:
            The monomial.
        """
        return cls([0] * degree + [coefficient])

    @property
    def coefficients(self) -> tuple[CoefficientT, ...]:
        """Coefficients from the constant term upwards."""
        return self._coefficients

    @property
    def degree(self) -> int | float:
        """Index of the last non-zero coefficient, or `ZERO_POLYNOMIAL_DEGREE`."""
        if not self._coefficients:
            return ZERO_POLYNOMIAL_DEGREE
        return len(self._coefficients) - 1

    @property
    def is_odd(self) -> bool:
        """Whether every even-power coefficient is zero."""
        return not any(self._coefficients[::2])

    def coefficient(self, power: int) -> CoefficientT:
        """Coefficient of ``t^power`` (zero beyond the degree).

        Args:
            power: Power of t.

        Returns:
            The coefficient.
        """
        if 0 <= power < len(self._coefficients):
            return self._coefficients[power]
        return self._coerce(0)

    def __bool__(self) -> bool:
        """Whether the polynomial is non-zero."""
        return bool(self._coefficients)

    def __eq__(self, other: object) -> bool:
        """Coefficient-wise equality."""
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return type(self) is type(other) and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        """Hash of the coefficients."""
        return hash((type(self).__name__, self._coefficients))

    def __add__(self, other: Self) -> Self:
        """Add."""
        length = max(len(self._coefficients), len(other.coefficients))
        return type(self)(
            self.coefficient(power) + other.coefficient(power) for power in range(length)
        )

    def __neg__(self) -> Self:
        """Negate."""
        return type(self)(-coefficient for coefficient in self._coefficients)

    def __sub__(self, other: Self) -> Self:
        """Subtract."""
        return self + (-other)

    def __mul__(self, other: "Self | CoefficientT | Scalar") -> Self:
        """Multiply by another polynomial or by a scalar coefficient."""
        if not isinstance(other, DensePolynomial):
            factor = self._coerce(other)
            return type(self)(coefficient * factor for coefficient in self._coefficients)

        if not self or not other:
            return type(self)()
        product = [self._coerce(0)] * (len(self._coefficients) + len(other.coefficients) - 1)
        for left_power, left in enumerate(self._coefficients):
            for right_power, right in enumerate(other.coefficients):
                power = left_power + right_power
                product[power] = product[power] + left * right
        return type(self)(product)

    def __rmul__(self, other: CoefficientT | Scalar) -> Self:
        """Multiply by a scalar (reflected)."""
        return self * other

    def __pow__(self, power: int) -> Self:
        """Raise to a non-negative integer power.

        Raises:
            ValueError: If the power is negative.
        """
        if power < 0:
            error_message = f"Only non-negative powers are supported, got {power}."
            raise ValueError(error_message)
        result = type(self)([1])
        for _ in range(power):
            result = result * self
        return result

    def derivative(self, order: int = 1) -> Self:
        """Formal derivative of the given order.

        Args:
            order: Number of times to differentiate (0 returns the polynomial unchanged).

        Returns:
            The derivative (zero once the order exceeds the degree).

        Raises:
            ValueError: If the order is negative.
        """
        if order < 0:
            error_message = f"Derivative order must be non-negative, got {order}."
            raise ValueError(error_message)
        return type(self)(
            coefficient * math.perm(power, order)
            for power, coefficient in enumerate(self._coefficients)
            if power >= order
        )

    def integral_0_to_pi(self) -> PiValue:
        """Exact integral over [0, pi].

        Returns:
            Sum of ``c_j * pi^(j+1) / (j+1)``.
        """
        total = PiValue()
        for power, coefficient in enumerate(self._coefficients):
            antiderivative = PiValue.monomial(Fraction(1, power + 1), power + 1)
            total += PiValue.coerce(coefficient) * antiderivative
        return total

    def evaluate_at_pi_multiple(self, ratio: Scalar) -> PiValue:
        """Exact value at ``t = ratio * pi``.

        Args:
            ratio: Rational multiple of pi to evaluate at.

        Returns:
            The value of the polynomial.
        """
        ratio = Fraction(ratio)
        total = PiValue()
        for power, coefficient in enumerate(self._coefficients):
            total += PiValue.coerce(coefficient) * PiValue.monomial(ratio**power, power)
        return total

    @final
    def __str__(self) -> str:
        """Rendering with terms in decreasing power, e.g. ``3/2 * t^3 - t + 1``."""
        if not self._coefficients:
            return "0"

        rendered = ""
        for power in reversed(range(len(self._coefficients))):
            coefficient = self._coefficients[power]
            if not coefficient:
                continue
            negative, magnitude = self._render_coefficient(coefficient)
            term = _render_power(magnitude, power)
            if not rendered:
                rendered = f"-{term}" if negative else term
            else:
                rendered += f" - {term}" if negative else f" + {term}"
        return rendered

    @final
    def __repr__(self) -> str:
        """Representation."""
        return f"{type(self).__name__}({str(self)!r})"

    @staticmethod
    @abstractmethod
    def _render_coefficient(coefficient: CoefficientT) -> tuple[bool, str]:
        """Sign and rendered magnitude of a coefficient."""


def _render_power(magnitude: str, power: int) -> str:
    if power == 0:
        return magnitude
    variable = "t" if power == 1 else f"t^{power}"
    if magnitude == "1":
        return variable
    return f"{magnitude} * {variable}"


@final
class PiPolynomial(DensePolynomial[PiValue]):
    """Polynomial in t whose coefficients are `PiValue` objects.

    Example:
        >>> print(PiPolynomial.shifted_power(2))
        t^2 - (2 * pi) * t + (1 * pi^2)
    """

    __slots__ = ()

    @staticmethod
    def _coerce(value: PiValue | Scalar) -> PiValue:
        return PiValue.coerce(value)

    @classmethod
    def shifted_power(cls, power: int) -> "PiPolynomial":
        """The polynomial ``(t - pi)^power``.

        Args:
            power: Non-negative exponent.

        Returns:
            The expanded polynomial.
        """
        return cls([-PI, 1]) ** power

    @staticmethod
    def _render_coefficient(coefficient: PiValue) -> tuple[bool, str]:
        if coefficient.is_rational:
            value = coefficient.coefficient(0)
            return value < 0, str(abs(value))
        if len(coefficient.terms) == 1 and coefficient.terms[0][1] < 0:
            return True, f"({-coefficient})"
        return False, f"({coefficient})"


@final
class QPolynomial(DensePolynomial[Fraction]):
    """Polynomial in t with rational coefficients.

    Example:
        >>> f = QPolynomial([0, 0, 1])
        >>> f.degree
        2
        >>> print(f.derivative())
        2 * t
        >>> print(f.integral_0_to_pi())
        1/3 * pi^3
        >>> QPolynomial().degree
        -inf
    """

    __slots__ = ()

    @staticmethod
    def _coerce(value: Fraction | Scalar) -> Fraction:
        return Fraction(value)

    def to_pi_polynomial(self) -> PiPolynomial:
        """Embed into the polynomials with pi-valued coefficients.

        Returns:
            The same polynomial with `PiValue` coefficients.
        """
        return PiPolynomial(PiValue.rational(coefficient) for coefficient in self.coefficients)

    @staticmethod
    def _render_coefficient(coefficient: Fraction) -> tuple[bool, str]:
        return coefficient < 0, str(abs(coefficient))


Polynomial = QPolynomial | PiPolynomial
"""Any polynomial the identity machinery accepts."""


def as_pi_polynomial(polynomial: Polynomial) -> PiPolynomial:
    """View any polynomial as one with pi-valued coefficients.

    Args:
        polynomial: Polynomial to convert.

    Returns:
        The polynomial with `PiValue` coefficients.
    """
    if isinstance(polynomial, QPolynomial):
        return polynomial.to_pi_polynomial()
    return polynomial


def poly_derivative(polynomial: Polynomial, order: int) -> Polynomial:
    """Formal derivative of the given order.

    Example:
        >>> print(poly_derivative(QPolynomial.monomial(4), 3))
        24 * t

    Args:
        polynomial: Polynomial to differentiate.
        order: Derivative order (0 is the identity).

    Returns:
        The derivative.
    """
    return polynomial.derivative(order)


def integral_0_to_pi(polynomial: Polynomial) -> PiValue:
    """Exact integral of the polynomial over [0, pi].

    Args:
        polynomial: Polynomial to integrate.

    Returns:
        The integral as a `PiValue`.
    """
    return polynomial.integral_0_to_pi()


def eval_at_pi_multiple(polynomial: Polynomial, ratio: Scalar) -> PiValue:
    """Exact value of the polynomial at ``ratio * pi``.

    Example:
        >>> print(eval_at_pi_multiple(QPolynomial.monomial(3), Fraction(1, 2)))
        1/8 * pi^3

    Args:
        polynomial: Polynomial to evaluate.
        ratio: Rational multiple of pi.

    Returns:
        The value as a `PiValue`.
    """
    return polynomial.evaluate_at_pi_multiple(ratio)
