"""Exception types shared by the package."""
from __future__ import annotations


class DyndegError(Exception):
    """Base class for every error raised by this package."""


class NotDivisible(DyndegError, ArithmeticError):
    pass


class DivisionByZero(DyndegError, ZeroDivisionError):
    pass


class NonIntegralResult(DyndegError, ArithmeticError):
    pass


class DegreeTooLow(DyndegError, ValueError):
    pass


class UnsupportedIndex(DyndegError, ValueError):
    pass


class NotKroneckerSmall(DyndegError, ValueError):
    pass


class BoundaryRoot(DyndegError, ValueError):
    """A root lies exactly on the circle being tested.

    ``inside`` and ``on_boundary`` carry the exact counts.
    """

    def __init__(self, message: str, inside: int = 0, on_boundary: int = 0):
        super().__init__(message)
        self.inside = inside
        self.on_boundary = on_boundary


class IndexTooSmall(DyndegError, ValueError):
    pass


class UnexpectedCyclotomicFactor(DyndegError, RuntimeError):
    pass


class InadmissibleN(DyndegError, ValueError):
    pass


class NotReciprocal(DyndegError, ValueError):
    pass


class WitnessNotFound(DyndegError, RuntimeError):
    pass


class DegreeUnsupported(DyndegError, ValueError):
    pass


class NotPrime(DyndegError, ValueError):
    pass


class DimensionOutOfRange(DyndegError, ValueError):
    pass


class NotSalem(DyndegError, ValueError):
    pass
