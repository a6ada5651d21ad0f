"""Exception types raised by the numerical kernels."""
from __future__ import annotations


class DomainError(ValueError):
    """Parameters lie outside the region where a quantity is defined."""


class DivergenceError(DomainError):
    """A series was requested outside its region of convergence."""


class SeriesOverflowError(OverflowError):
    """A series term overflowed double precision.

    Attributes
    ----------
    k : int
        Index of the first offending term.
    """

    def __init__(self, k: int, message: str | None = None):
        self.k = int(k)
        super().__init__(message or f"series term {k} overflows double precision")


class AccuracyError(ArithmeticError):
    """A requested tolerance could not be met.

    Attributes
    ----------
    estimate : float or complex
        Best available value.
    error : float
        Estimated absolute error of ``estimate``.
    """

    def __init__(self, message: str, estimate=None, error: float = float("inf")):
        self.estimate = estimate
        self.error = error
        super().__init__(f"{message} (estimate={estimate!r}, error~{error:.3g})")
