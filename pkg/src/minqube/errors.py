"""Exception types shared by the package."""


class InvalidParameter(ValueError):
    """An argument is outside the range an operation accepts."""


class DomainError(ValueError):
    """A point lies outside the geometric domain an operation is defined on."""


class NumericalFailure(ArithmeticError):
    """An iterative or floating point computation did not produce a usable result."""


class SearchFailure(RuntimeError):
    """No witness polynomial could be found."""


class IndexOutOfRange(IndexError):
    """A polynomial index exceeds what a recurrence table or family holds."""
