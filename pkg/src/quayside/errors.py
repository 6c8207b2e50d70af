"""Exception types shared across quayside modules."""


class QuaysideError(Exception):
    """Base class for all quayside errors."""


class ConvergenceError(QuaysideError):
    """Fixed-point iteration failed to reach tolerance.

    Carries the last iterate and its residual so callers can inspect
    how close the solve got.
    """

    def __init__(self, message, last_value=None, residual=None, iterations=None):
        super().__init__(message)
        self.last_value = last_value
        self.residual = residual
        self.iterations = iterations


class SingularityError(QuaysideError):
    """A transform denominator is (numerically) zero at the requested point."""


class StationarityError(QuaysideError):
    """The requested quantity has no stationary meaning (traffic >= 1)."""

    def __init__(self, message, first_overloaded_class=None):
        super().__init__(message)
        self.first_overloaded_class = first_overloaded_class


class InversionError(QuaysideError):
    """Numerical Laplace inversion produced a non-finite result."""


class NumericOverflowError(QuaysideError):
    """A transform value underflowed/overflowed past usable precision."""

    def __init__(self, message, class_index=None):
        super().__init__(message)
        self.class_index = class_index


class ScenarioError(QuaysideError):
    """A scenario file failed validation; message names the offending field."""
