"""Append-only cache of the three rational coefficient sequences.

The sequences are defined by multiple recurrences in which every new term depends on all earlier
ones:

* ``A_p`` with ``xi(2p) = A_p pi^(2p)``, from ``A_1 = 1/12``.
* ``B_p`` with ``zeta(2p) = B_p pi^(2p)``, from ``B_1 = 1/6``.
* ``C_p`` with ``psi(2p + 1) = C_p pi^(2p + 1)``, from ``C_0 = 1/4``.

Each recurrence returns its base case when the sum over earlier terms is empty.
"""
from collections.abc import Callable
from fractions import Fraction
import logging
import math
import threading
from typing import final

from pydantic import BaseModel, ConfigDict, NonNegativeInt, PositiveInt, validate_call


logger = logging.getLogger(__name__)


class BridgeInconsistencyError(ArithmeticError):
    """The two independent recurrences for ``B_p`` disagree."""

    def __init__(self, message: str = "B_p does not match 4^p / (4^p - 2) * A_p.") -> None:
        """Initialise the bridge inconsistency error.

        Args:
            message: Error message.
        """
        super().__init__(message)


class CoefficientConfig(BaseModel):
    """Coefficient cache configuration."""

    model_config = ConfigDict(frozen=True)

    check_bridge: bool = True
    """Check ``B_p (4^p - 2) = 4^p A_p`` every time a ``B_p`` is added to the cache."""


def _solve_even_recurrence(previous: list[Fraction], right_hand_side: Fraction) -> Fraction:
    """Solve the shared even-argument recurrence for the next term after `previous`."""
    p = len(previous) + 1
    earlier = sum(
        (
            (-1) ** (k - 1) * math.perm(2 * p, 2 * k - 1) * value
            for k, value in enumerate(previous, start=1)
        ),
        Fraction(0),
    )
    return (-1) ** (p - 1) * (right_hand_side - earlier) / math.factorial(2 * p)


def _next_a(previous: list[Fraction]) -> Fraction:
    p = len(previous) + 1
    return _solve_even_recurrence(previous, Fraction(1, 2 * (2 * p + 1)))


def _next_b(previous: list[Fraction]) -> Fraction:
    p = len(previous) + 1
    return _solve_even_recurrence(previous, Fraction(p, 2 * p + 1))


def _next_c(previous: list[Fraction]) -> Fraction:
    """``C_p`` for ``p = len(previous)`` from ``C_0 .. C_(p-1)``."""
    p = len(previous)
    earlier = sum(
        ((-1) ** k * math.perm(2 * p + 1, 2 * k) * c_k for k, c_k in enumerate(previous)),
        Fraction(0),
    )
    return (-1) ** p * (Fraction(1, 4 ** (p + 1)) - earlier) / math.factorial(2 * p + 1)


@final
class CoefficientCache:
    """Memoised ``A_p``, ``B_p`` and ``C_p``.

    Entries are computed in order and never change once stored. Extension happens under a lock
    and a new entry is only published once it is complete, so concurrent readers never see a
    partially computed prefix.

    Example:
        >>> cache = CoefficientCache()
        >>> cache.a(2), cache.b(2), cache.c(1)
        (Fraction(7, 720), Fraction(1, 90), Fraction(1, 32))
    """

    def __init__(self, config: CoefficientConfig | None = None) -> None:
        """Initialise an empty cache.

        Args:
            config: Cache configuration.
        """
        self.config = config or CoefficientConfig()
        self._lock = threading.RLock()
        self._a_values: list[Fraction] = []
        self._b_values: list[Fraction] = []
        self._c_values: list[Fraction] = []

    @property
    def sizes(self) -> tuple[int, int, int]:
        """Number of cached A, B and C entries."""
        return len(self._a_values), len(self._b_values), len(self._c_values)

    def _extend(
        self,
        values: list[Fraction],
        length: int,
        next_value: Callable[[list[Fraction]], Fraction],
        on_insert: Callable[[int, Fraction], None] | None = None,
    ) -> None:
        with self._lock:
            if len(values) >= length:
                return
            logger.debug("Extending coefficient cache from %d to %d entries", len(values), length)
            while len(values) < length:
                value = next_value(values)
                if on_insert is not None:
                    on_insert(len(values), value)
                values.append(value)

    def _check_bridge(self, index: int, b_value: Fraction) -> None:
        p = index + 1
        a_value = self.a(p)
        if b_value * (4**p - 2) != 4**p * a_value:
            error_message = (
                f"B_{p} = {b_value} does not satisfy B_p (4^p - 2) = 4^p A_p "
                f"with A_{p} = {a_value}."
            )
            raise BridgeInconsistencyError(error_message)

    @validate_call
    def a(self, p: PositiveInt) -> Fraction:
        """``A_p``, the coefficient of ``pi^(2p)`` in ``xi(2p)``.

        Args:
            p: Index, at least 1.

        Returns:
            The rational ``A_p``.
        """
        if p > len(self._a_values):
            self._extend(self._a_values, p, _next_a)
        return self._a_values[p - 1]

    @validate_call
    def b(self, p: PositiveInt) -> Fraction:
        """``B_p``, the coefficient of ``pi^(2p)`` in ``zeta(2p)``.

        Args:
            p: Index, at least 1.

        Returns:
            The rational ``B_p``.

        Raises:
            BridgeInconsistencyError: If bridge checking is enabled and the value disagrees with
                the one derived from ``A_p``.
        """
        if p > len(self._b_values):
            on_insert = self._check_bridge if self.config.check_bridge else None
            self._extend(self._b_values, p, _next_b, on_insert)
        return self._b_values[p - 1]

    @validate_call
    def c(self, p: NonNegativeInt) -> Fraction:
        """``C_p``, the coefficient of ``pi^(2p + 1)`` in ``psi(2p + 1)``.

        Args:
            p: Index, at least 0.

        Returns:
            The rational ``C_p``.
        """
        if p >= len(self._c_values):
            self._extend(self._c_values, p + 1, _next_c)
        return self._c_values[p]
