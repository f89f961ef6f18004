"""Exceptions shared across the package."""


class TruncationError(Exception):
    """A computation needs series data beyond the materialized order.

    Raised instead of silently under-truncating; needed_order says how far
    the series would have to be extended for the request to be exact.
    """

    def __init__(self, message, needed_order=None):
        super().__init__(message)
        self.needed_order = needed_order


class StabilizationError(TruncationError):
    """A truncated computation did not stabilize, so no value is certified."""
