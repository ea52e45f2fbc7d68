"""Cooperative cancellation of long summations."""
import threading
from typing import final


class SummationCancelledError(RuntimeError):
    """A summation observed a cancellation request."""

    def __init__(self, message: str = "Summation cancelled.") -> None:
        """Initialise the summation cancelled error.

        Args:
            message: Error message.
        """
        super().__init__(message)


@final
class CancellationToken:
    """Flag a caller sets to stop a running summation at its next checkpoint.

    Example:
        >>> token = CancellationToken()
        >>> token.cancelled
        False
        >>> token.cancel()
        >>> token.cancelled
        True
    """

    def __init__(self) -> None:
        """Initialise an unset token."""
        self._event = threading.Event()

    def cancel(self) -> None:
        """Request cancellation."""
        self._event.set()

    @property
    def cancelled(self) -> bool:
        """Whether cancellation was requested."""
        return self._event.is_set()

    def raise_if_cancelled(self) -> None:
        """Raise if cancellation was requested.

        Raises:
            SummationCancelledError: If the token is set.
        """
        if self.cancelled:
            raise SummationCancelledError
