"""Exact values in the ring of rational polynomials in pi (and 1/pi).

A `PiValue` is a finite sum ``c_e * pi^e`` with rational ``c_e`` and integer exponents ``e >= -1``.
Since pi is transcendental, two different `PiValue` objects never represent the same real number,
so structural equality is equality of the represented reals.
"""
from collections.abc import Iterator, Mapping
from fractions import Fraction
import math
import re
from typing import Final, Self, final

import mpmath


MIN_PI_EXPONENT: Final[int] = -1
"""Smallest exponent of pi a value may carry (raw Fourier coefficients carry a 2/pi factor)."""

_TERM_PATTERN: Final[re.Pattern[str]] = re.compile(
    r"^(?P<coefficient>\d+(?:/\d+)?)(?: \* pi(?:\^(?P<exponent>-?\d+))?)?$"
)


class PiExponentError(ValueError):
    """Pi exponent below the allowed minimum."""

    def __init__(self, message: str = "Exponents of pi below -1 are not representable.") -> None:
        """Initialise the pi exponent error.

        Args:
            message: Error message.
        """
        super().__init__(message)


Scalar = Fraction | int


@final
class PiValue:
    """Exact value of the form sum of rational multiples of integer powers of pi.

    Example:
        >>> zeta_two = PiValue.monomial(Fraction(1, 6), 2)
        >>> print(zeta_two)
        1/6 * pi^2
        >>> print(zeta_two + zeta_two / 2)
        1/4 * pi^2
        >>> print(PiValue.parse("2 + 3 * pi^-1") * PI)
        2 * pi + 3
    """

    __slots__ = ("_terms",)

    _terms: tuple[tuple[int, Fraction], ...]
    """Non-zero terms as (exponent, coefficient) pairs, in decreasing exponent order."""

    def __init__(self, terms: Mapping[int, Scalar] | None = None) -> None:
        """Initialise from an exponent to coefficient mapping.

        Args:
            terms: Coefficient of each power of pi. Zero coefficients are dropped.

        Raises:
            PiExponentError: If an exponent with a non-zero coefficient is below -1.
        """
        cleaned: dict[int, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            if not coefficient:
                continue
            if exponent < MIN_PI_EXPONENT:
                error_message = f"Exponent {exponent} of pi is below the minimum {MIN_PI_EXPONENT}."
                raise PiExponentError(error_message)
            cleaned[exponent] = Fraction(coefficient)
        self._terms = tuple(sorted(cleaned.items(), reverse=True))

    @classmethod
    def monomial(cls, coefficient: Scalar, exponent: int) -> Self:
        """Single term ``coefficient * pi^exponent``.

        Args:
            coefficient: Rational coefficient.
            exponent: Power of pi.

        Returns:
            The monomial value.
        """
        return cls({exponent: coefficient})

    @classmethod
    def rational(cls, value: Scalar) -> Self:
        """Pure rational value (a constant term only).

        Args:
            value: The rational.

        Returns:
            The value with a single exponent-0 term (or zero).
        """
        return cls({0: value})

    @classmethod
    def coerce(cls, value: "PiValue | Scalar") -> "PiValue":
        """Lift a rational to a `PiValue` (values that already are `PiValue` pass through).

        Args:
            value: Rational or `PiValue`.

        Returns:
            The `PiValue`.
        """
        if isinstance(value, PiValue):
            return value
        return cls.rational(value)

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse the canonical rendering produced by ``str``.

        Args:
            text: Canonical text such as ``"1/6 * pi^2"`` or ``"2 * pi + 3 * pi^-1"``.

        Returns:
            The parsed value.

        Raises:
            ValueError: If the text is not in canonical form.

        Example:
            >>> PiValue.parse("1/6 * pi^2") == PiValue.monomial(Fraction(1, 6), 2)
            True
            >>> str(PiValue.parse("-1/4 * pi - 2"))
            '-1/4 * pi - 2'
        """
        stripped = text.strip()
        if stripped == "0":
            return cls()

        sign = 1
        if stripped.startswith("-"):
            sign, stripped = -1, stripped[1:]

        terms: dict[int, Fraction] = {}
        pieces = re.split(r" ([+-]) ", stripped)
        signs = [sign] + [1 if operator == "+" else -1 for operator in pieces[1::2]]
        for term_sign, piece in zip(signs, pieces[::2], strict=True):
            match = _TERM_PATTERN.match(piece)
            if match is None:
                error_message = f"Cannot parse term {piece!r} of {text!r} as a multiple of pi."
                raise ValueError(error_message)

            if " * pi" in piece:
                exponent = int(match.group("exponent") or 1)
            else:
                exponent = 0
            if exponent in terms:
                error_message = f"Exponent {exponent} appears twice in {text!r}."
                raise ValueError(error_message)
            terms[exponent] = term_sign * Fraction(match.group("coefficient"))

        parsed = cls(terms)
        if str(parsed) != text.strip():
            error_message = f"{text!r} is not in canonical form (expected {str(parsed)!r})."
            raise ValueError(error_message)
        return parsed

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Non-zero (exponent, coefficient) pairs in decreasing exponent order."""
        return self._terms

    @property
    def exponents(self) -> tuple[int, ...]:
        """Exponents with a non-zero coefficient, in decreasing order."""
        return tuple(exponent for exponent, _ in self._terms)

    def coefficient(self, exponent: int) -> Fraction:
        """Coefficient of ``pi^exponent`` (zero if absent).

        Args:
            exponent: Power of pi.

        Returns:
            The rational coefficient.
        """
        return dict(self._terms).get(exponent, Fraction(0))

    @property
    def is_rational(self) -> bool:
        """Whether the value has no term in a non-zero power of pi."""
        return all(exponent == 0 for exponent, _ in self._terms)

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        """Iterate over (exponent, coefficient) pairs."""
        return iter(self._terms)

    def __bool__(self) -> bool:
        """Whether the value is non-zero."""
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        """Exact equality."""
        if not isinstance(other, PiValue):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        """Hash of the canonical terms."""
        return hash(self._terms)

    def __add__(self, other: "PiValue | Scalar") -> "PiValue":
        """Add."""
        other_value = PiValue.coerce(other)
        summed = dict(self._terms)
        for exponent, coefficient in other_value:
            summed[exponent] = summed.get(exponent, Fraction(0)) + coefficient
        return PiValue(summed)

    def __radd__(self, other: Scalar) -> "PiValue":
        """Add (reflected)."""
        return self + other

    def __neg__(self) -> "PiValue":
        """Negate."""
        return PiValue({exponent: -coefficient for exponent, coefficient in self._terms})

    def __sub__(self, other: "PiValue | Scalar") -> "PiValue":
        """Subtract."""
        return self + (-PiValue.coerce(other))

    def __rsub__(self, other: Scalar) -> "PiValue":
        """Subtract (reflected)."""
        return PiValue.coerce(other) - self

    def __mul__(self, other: "PiValue | Scalar") -> "PiValue":
        """Multiply (exponents add)."""
        if not isinstance(other, PiValue):
            factor = Fraction(other)
            return PiValue(
                {exponent: coefficient * factor for exponent, coefficient in self._terms}
            )

        product: dict[int, Fraction] = {}
        for left_exponent, left_coefficient in self._terms:
            for right_exponent, right_coefficient in other._terms:
                exponent = left_exponent + right_exponent
                product[exponent] = (
                    product.get(exponent, Fraction(0)) + left_coefficient * right_coefficient
                )
        return PiValue(product)

    def __rmul__(self, other: Scalar) -> "PiValue":
        """Multiply (reflected)."""
        return self * other

    def __truediv__(self, other: Scalar) -> "PiValue":
        """Divide by a non-zero rational.

        Raises:
            ZeroDivisionError: If dividing by zero.
        """
        divisor = Fraction(other)
        if divisor == 0:
            error_message = "Division of a PiValue by zero."
            raise ZeroDivisionError(error_message)
        return self * (1 / divisor)

    def __pow__(self, power: int) -> "PiValue":
        """Raise to a non-negative integer power.

        Raises:
            ValueError: If the power is negative.
        """
        if power < 0:
            error_message = f"Only non-negative powers are supported, got {power}."
            raise ValueError(error_message)
        result = PiValue.rational(1)
        for _ in range(power):
            result = result * self
        return result

    def divided_by_pi(self) -> "PiValue":
        """Decrement every exponent by one.

        Returns:
            The value divided by pi.

        Raises:
            PiExponentError: If the value already carries a ``pi^-1`` term.
        """
        if MIN_PI_EXPONENT in self.exponents:
            error_message = (
                f"Cannot divide {self} by pi: it already carries a pi^{MIN_PI_EXPONENT} term."
            )
            raise PiExponentError(error_message)
        return PiValue({exponent - 1: coefficient for exponent, coefficient in self._terms})

    def interval(self, pi_lower: Fraction, pi_upper: Fraction) -> tuple[Fraction, Fraction]:
        """Exact enclosure of the value given an enclosure of pi.

        Args:
            pi_lower: Positive lower bound on pi.
            pi_upper: Upper bound on pi.

        Returns:
            Lower and upper bound on the represented real.

        Raises:
            ValueError: If the pi enclosure is empty or not positive.
        """
        if not 0 < pi_lower <= pi_upper:
            error_message = f"Invalid enclosure of pi: [{pi_lower}, {pi_upper}]."
            raise ValueError(error_message)

        lower = upper = Fraction(0)
        for exponent, coefficient in self._terms:
            first = coefficient * pi_lower**exponent
            second = coefficient * pi_upper**exponent
            lower += min(first, second)
            upper += max(first, second)
        return lower, upper

    def to_mpf(self) -> mpmath.mpf:
        """Evaluate at the current mpmath working precision.

        Returns:
            The value as an mpmath float.
        """
        return mpmath.fsum(
            mpmath.mpf(coefficient.numerator)
            / coefficient.denominator
            * mpmath.pi**exponent
            for exponent, coefficient in self._terms
        )

    def to_float(self) -> float:
        """Evaluate in double precision.

        Returns:
            The value as a float.
        """
        return math.fsum(
            float(coefficient) * math.pi**exponent for exponent, coefficient in self._terms
        )

    @final
    def __str__(self) -> str:
        """Canonical rendering, e.g. ``1/6 * pi^2`` or ``2 * pi - 1/3``."""
        if not self._terms:
            return "0"

        rendered = ""
        for position, (exponent, coefficient) in enumerate(self._terms):
            magnitude = _render_term(abs(coefficient), exponent)
            if position == 0:
                rendered = f"-{magnitude}" if coefficient < 0 else magnitude
            else:
                rendered += f" - {magnitude}" if coefficient < 0 else f" + {magnitude}"
        return rendered

    @final
    def __repr__(self) -> str:
        """Representation."""
        return f"PiValue({str(self)!r})"


def _render_term(magnitude: Fraction, exponent: int) -> str:
    if exponent == 0:
        return str(magnitude)
    if exponent == 1:
        return f"{magnitude} * pi"
    return f"{magnitude} * pi^{exponent}"


PI: Final[PiValue] = PiValue.monomial(1, 1)
"""The value pi itself."""

ZERO: Final[PiValue] = PiValue()
"""The zero value."""


def pi_divide(value: PiValue) -> PiValue:
    """Divide a value by pi.

    Example:
        >>> print(pi_divide(PiValue({0: 3, 1: 2})))
        2 + 3 * pi^-1

    Args:
        value: Value whose exponents are all non-negative.

    Returns:
        The value with every exponent decremented by one.
    """
    return value.divided_by_pi()
