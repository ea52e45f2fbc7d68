"""Numeric summation configuration."""
import os
from typing import Annotated, Final

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt


TERM_CEILING_ENVIRONMENT_VARIABLE: Final[str] = "ZETAP_TERM_CEILING"
"""Environment variable overriding the direct-summation term ceiling."""


class NumericConfig(BaseModel):
    """Limits and thresholds of the numeric summation routines."""

    model_config = ConfigDict(frozen=True)

    term_ceiling: PositiveInt = 10**8
    """Largest number of terms summed directly.

    Beyond it, alternating series switch to the Euler transform and other series fail with a
    tolerance-unreachable error.
    """

    euler_max_terms: PositiveInt = 5_000
    """Largest number of Euler-transformed terms."""

    chunk_size: Annotated[int, Field(ge=1, le=2**24)] = 2**16
    """Number of terms generated per vectorised chunk."""

    high_precision_threshold: PositiveFloat = 1e-14
    """Tolerances below this are summed in multiprecision instead of double precision."""

    @classmethod
    def from_env(cls) -> "NumericConfig":
        """Default configuration with overrides from the environment.

        Returns:
            The configuration.

        Raises:
            pydantic.ValidationError: If an override is not a valid value.
        """
        overrides: dict[str, str] = {}
        term_ceiling = os.getenv(TERM_CEILING_ENVIRONMENT_VARIABLE)
        if term_ceiling is not None:
            overrides["term_ceiling"] = term_ceiling
        return cls.model_validate(overrides)
