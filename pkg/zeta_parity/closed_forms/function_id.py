"""The six series and the shape of their terms."""
from enum import auto
from typing import NamedTuple

from strenum import LowercaseStrEnum


class SeriesShape(NamedTuple):
    """Terms ``s^k / (step * k + offset)^x`` for ``k >= 0``, with ``s = -1`` if alternating.

    Example:
        >>> FunctionId.PSI.series_shape
        SeriesShape(step=2, offset=1, alternating=True)
    """

    step: int
    """Step between consecutive summed integers."""

    offset: int
    """First summed integer."""

    alternating: bool
    """Whether consecutive terms alternate in sign (starting positive)."""


class FunctionId(LowercaseStrEnum):
    """The series being evaluated.

    Example:
        >>> print(FunctionId.ZETA)
        zeta
        >>> FunctionId("psi").alternating
        True
    """

    ZETA = auto()
    """Riemann zeta, ``sum_{n>=1} n^-x`` for ``x > 1``."""

    ALPHA = auto()
    """Even-denominator series, ``sum_{m>=1} (2m)^-x`` for ``x > 1``."""

    BETA = auto()
    """Odd-denominator series, ``sum_{m>=0} (2m+1)^-x`` for ``x > 1`` (Dirichlet lambda)."""

    XI = auto()
    """Alternating series, ``sum_{n>=1} (-1)^(n-1) n^-x`` for ``x > 0`` (Dirichlet eta)."""

    PHI = auto()
    """Alternating even-denominator series, ``sum_{m>=1} (-1)^(m-1) (2m)^-x`` for ``x > 0``."""

    PSI = auto()
    """Alternating odd-denominator series, ``sum_{m>=0} (-1)^m (2m+1)^-x`` for ``x > 0``.

    This is the Dirichlet beta function.
    """

    @property
    def series_shape(self) -> SeriesShape:
        """Shape of the series' terms."""
        return _SERIES_SHAPES[self]

    @property
    def alternating(self) -> bool:
        """Whether the series alternates in sign."""
        return self.series_shape.alternating

    @property
    def convergence_abscissa(self) -> int:
        """The series converges for real arguments strictly above this value."""
        return 0 if self.alternating else 1


_SERIES_SHAPES: dict[FunctionId, SeriesShape] = {
    FunctionId.ZETA: SeriesShape(step=1, offset=1, alternating=False),
    FunctionId.ALPHA: SeriesShape(step=2, offset=2, alternating=False),
    FunctionId.BETA: SeriesShape(step=2, offset=1, alternating=False),
    FunctionId.XI: SeriesShape(step=1, offset=1, alternating=True),
    FunctionId.PHI: SeriesShape(step=2, offset=2, alternating=True),
    FunctionId.PSI: SeriesShape(step=2, offset=1, alternating=True),
}
