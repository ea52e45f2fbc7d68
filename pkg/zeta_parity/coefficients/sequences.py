"""Public accessors for the coefficient sequences, backed by a process-wide cache."""
from fractions import Fraction
from typing import Final

from pydantic import NonNegativeInt, PositiveInt, validate_call

from zeta_parity.coefficients.cache import CoefficientCache


DEFAULT_CACHE: Final[CoefficientCache] = CoefficientCache()
"""Cache shared by every caller that does not bring its own."""


def _resolve(cache: CoefficientCache | None) -> CoefficientCache:
    return DEFAULT_CACHE if cache is None else cache


@validate_call(config={"arbitrary_types_allowed": True})
def coeff_a(p: PositiveInt, cache: CoefficientCache | None = None) -> Fraction:
    """Rational ``A_p`` with ``xi(2p) = A_p pi^(2p)``.

    Example:
        >>> coeff_a(1), coeff_a(3)
        (Fraction(1, 12), Fraction(31, 30240))

    Args:
        p: Index, at least 1.
        cache: Cache to use (defaults to the shared one).

    Returns:
        ``A_p``.
    """
    return _resolve(cache).a(p)


@validate_call(config={"arbitrary_types_allowed": True})
def coeff_b(p: PositiveInt, cache: CoefficientCache | None = None) -> Fraction:
    """Rational ``B_p`` with ``zeta(2p) = B_p pi^(2p)``.

    Example:
        >>> coeff_b(1), coeff_b(3)
        (Fraction(1, 6), Fraction(1, 945))

    Args:
        p: Index, at least 1.
        cache: Cache to use (defaults to the shared one).

    Returns:
        ``B_p``.
    """
    return _resolve(cache).b(p)


@validate_call(config={"arbitrary_types_allowed": True})
def coeff_c(p: NonNegativeInt, cache: CoefficientCache | None = None) -> Fraction:
    """Rational ``C_p`` with ``psi(2p + 1) = C_p pi^(2p + 1)``.

    Example:
        >>> coeff_c(0), coeff_c(2)
        (Fraction(1, 4), Fraction(5, 1536))

    Args:
        p: Index, at least 0.
        cache: Cache to use (defaults to the shared one).

    Returns:
        ``C_p``.
    """
    return _resolve(cache).c(p)


@validate_call(config={"arbitrary_types_allowed": True})
def bridge_b_from_a(p: PositiveInt, cache: CoefficientCache | None = None) -> Fraction:
    """``B_p`` derived from ``A_p`` as ``4^p / (4^p - 2) * A_p``.

    Independent of the ``B_p`` recurrence, so the two must agree exactly.

    Example:
        >>> bridge_b_from_a(2)
        Fraction(1, 90)

    Args:
        p: Index, at least 1.
        cache: Cache to use (defaults to the shared one).

    Returns:
        ``B_p`` as computed from ``A_p``.
    """
    return Fraction(4**p, 4**p - 2) * _resolve(cache).a(p)
