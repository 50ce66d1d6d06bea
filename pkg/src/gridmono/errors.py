"""Exception types shared across the package."""


class GridmonoError(Exception):
    """Base class for all package errors."""


class ValidationError(GridmonoError, ValueError):
    """Malformed input: bad dimensions, non-finite values, out-of-range points."""


class CapExceededError(GridmonoError):
    """Exact computation refused because the domain is too large; use certified bounds instead."""


class InfeasibleInstanceError(GridmonoError):
    """Requested instance parameters cannot be realized (e.g. no fitting certified ball)."""


class UncertifiedInstanceError(GridmonoError):
    """A power-experiment cell referenced a far instance without a distance certificate."""
