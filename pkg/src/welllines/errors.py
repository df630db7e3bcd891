"""Exception types raised by welllines."""


class WellLinesError(Exception):
    """Base class for all library errors."""


class LambertWDomainError(WellLinesError, ValueError):
    """W_k(0) requested for a non-principal branch."""


class ConvergenceError(WellLinesError, ArithmeticError):
    """An iterative solver hit its iteration cap without converging."""

    def __init__(self, message, k=None, z=None):
        super().__init__(message)
        self.k = k
        self.z = z


class MapOverflowError(WellLinesError, OverflowError):
    """exp(u) would exceed the representable floating point range."""


class SingularInputError(WellLinesError, ValueError):
    """Input sits on a pole of the expression being evaluated."""


class ConsistencyError(WellLinesError, ValueError):
    """Two inputs that must describe the same system disagree."""
