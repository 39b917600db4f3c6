"""Exception types shared across the package."""


class QuadcoError(Exception):
    """Base class for all errors raised by quadco."""


class NonInvertibleImage(QuadcoError):
    """A variable with a negative exponent was sent to a non-monomial."""


class ColumnMismatch(QuadcoError):
    """Two matrices (or a matrix and a basis) disagree on column labels."""


class BadSplit(QuadcoError):
    pass


class BadIndex(QuadcoError):
    pass


class NotInS(QuadcoError):
    pass


class BadMembership(QuadcoError):
    pass


class NegativeExcess(QuadcoError):
    pass


class NotDualizable(QuadcoError):
    pass


class NoSigma(QuadcoError):
    pass


class PreconditionFailed(QuadcoError):
    pass


class StepLimitExceeded(QuadcoError):
    """Rewriting did not reach a normal form within the configured bound."""


class UnboundedWithoutWindow(QuadcoError):
    pass


class RouteMismatch(QuadcoError):
    """Two independent computations of the same quantity disagreed."""
