"""Exception types shared across the package."""


class DivisibilityError(ArithmeticError):
    """Exact division left a nonzero remainder.

    The offending remainder is kept on the exception so that a failed
    division can be diagnosed (a nonzero remainder in the Vandermonde
    division is a consistency alarm, not merely a bad input).
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ConsistencyError(RuntimeError):
    """A property that the theory guarantees failed to hold at runtime."""


class DegenerateEvaluationError(ZeroDivisionError):
    """An evaluation point annihilated a denominator factor."""
