"""Exception types shared across the package."""


class AircostError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(AircostError, ValueError):
    """An input violates a documented precondition (nonpositive CADR, bad range, ...)."""


class NotFoundError(AircostError, LookupError):
    """A lookup key (unit id, region code, filter class) does not exist."""
