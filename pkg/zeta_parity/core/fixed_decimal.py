"""Fixed-point decimals with a certified error bound."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Self, final


@dataclass(frozen=True)
class FixedDecimal:
    """Decimal ``mantissa / 10^scale`` known to be within ``error_bound`` of the true value.

    Example:
        >>> approximation = FixedDecimal(31415926535, 10, Fraction(1, 10**10))
        >>> str(approximation)
        '3.1415926535'
        >>> approximation.contains(Fraction(314159265358979, 10**14))
        True
    """

    mantissa: int
    """Integer digits of the decimal."""

    scale: int
    """Number of digits after the decimal point."""

    error_bound: Fraction = Fraction(0)
    """Bound on the distance between the represented and the true value."""

    def __post_init__(self) -> None:
        """Validate the scale and error bound.

        Raises:
            ValueError: If the scale or the error bound is negative.
        """
        if self.scale < 0:
            error_message = f"Scale must be non-negative, got {self.scale}."
            raise ValueError(error_message)
        if self.error_bound < 0:
            error_message = f"Error bound must be non-negative, got {self.error_bound}."
            raise ValueError(error_message)

    @classmethod
    def from_interval(cls, lower: Fraction, upper: Fraction, digits: int) -> Self:
        """Round the midpoint of an enclosure to the given number of decimals.

        Args:
            lower: Lower bound on the true value.
            upper: Upper bound on the true value.
            digits: Decimals to keep.

        Returns:
            The rounded decimal, whose error bound covers both rounding and the enclosure radius.

        Raises:
            ValueError: If the enclosure is empty.
        """
        if lower > upper:
            error_message = f"Empty enclosure [{lower}, {upper}]."
            raise ValueError(error_message)
        midpoint = (lower + upper) / 2
        mantissa = round(midpoint * 10**digits)
        rounding_error = abs(midpoint - Fraction(mantissa, 10**digits))
        return cls(mantissa, digits, rounding_error + (upper - lower) / 2)

    @property
    def value(self) -> Fraction:
        """Represented value as an exact rational."""
        return Fraction(self.mantissa, 10**self.scale)

    @property
    def lower(self) -> Fraction:
        """Lower end of the certified enclosure."""
        return self.value - self.error_bound

    @property
    def upper(self) -> Fraction:
        """Upper end of the certified enclosure."""
        return self.value + self.error_bound

    def contains(self, value: Fraction) -> bool:
        """Whether a rational lies in the certified enclosure.

        Args:
            value: Rational to test.

        Returns:
            True if ``lower <= value <= upper``.
        """
        return self.lower <= value <= self.upper

    def rescaled(self, scale: int) -> "FixedDecimal":
        """Same value at a finer scale (the error bound is unchanged).

        Args:
            scale: New scale, at least the current one.

        Returns:
            The rescaled decimal.

        Raises:
            ValueError: If the new scale would drop digits.
        """
        if scale < self.scale:
            error_message = f"Cannot rescale from {self.scale} to fewer digits ({scale})."
            raise ValueError(error_message)
        return FixedDecimal(self.mantissa * 10 ** (scale - self.scale), scale, self.error_bound)

    def __add__(self, other: "FixedDecimal") -> "FixedDecimal":
        """Add, summing the error bounds."""
        scale = max(self.scale, other.scale)
        left, right = self.rescaled(scale), other.rescaled(scale)
        return FixedDecimal(
            left.mantissa + right.mantissa, scale, left.error_bound + right.error_bound
        )

    def __neg__(self) -> "FixedDecimal":
        """Negate."""
        return FixedDecimal(-self.mantissa, self.scale, self.error_bound)

    def __sub__(self, other: "FixedDecimal") -> "FixedDecimal":
        """Subtract, summing the error bounds."""
        return self + (-other)

    def __mul__(self, factor: int) -> "FixedDecimal":
        """Multiply by an integer, scaling the error bound by its magnitude."""
        return FixedDecimal(self.mantissa * factor, self.scale, self.error_bound * abs(factor))

    @final
    def __str__(self) -> str:
        """Plain decimal digits, e.g. ``-0.25``."""
        sign = "-" if self.mantissa < 0 else ""
        digits = str(abs(self.mantissa)).rjust(self.scale + 1, "0")
        if self.scale == 0:
            return f"{sign}{digits}"
        return f"{sign}{digits[: -self.scale]}.{digits[-self.scale :]}"
