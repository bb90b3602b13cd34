"""Exception hierarchy shared by every module of the package."""


class SaxlError(Exception):
    """Base class for all errors raised by saxl."""


class MixedDegree(SaxlError, ValueError):
    pass


class PointOutOfRange(SaxlError, IndexError):
    pass


class KTooLarge(SaxlError, ValueError):
    pass


class NotTransitive(SaxlError, ValueError):
    pass


class NotPrime(SaxlError, ValueError):
    pass


class NotPrimePower(SaxlError, ValueError):
    pass


class FieldTooLarge(SaxlError, ValueError):
    pass


class DivisionByZero(SaxlError, ZeroDivisionError):
    pass


class NotDivisor(SaxlError, ValueError):
    pass


class DegreeTooSmall(SaxlError, ValueError):
    pass


class DegreeCapExceeded(SaxlError, ValueError):
    pass


class NotSubgroup(SaxlError, ValueError):
    pass


class UnknownName(SaxlError, KeyError):
    pass


class BudgetExceeded(SaxlError, RuntimeError):
    """A search cap was hit; the answer is unknown (never wrong)."""


class BaseSizeTooSmall(SaxlError, ValueError):
    pass


class NotAnEdge(SaxlError, ValueError):
    pass


class NoCommonVertex(SaxlError, ValueError):
    pass


class EmptyHypergraph(SaxlError, ValueError):
    pass


class InvariantViolation(SaxlError, AssertionError):
    """A mathematical invariant failed; this always indicates a bug."""


class ParseError(SaxlError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ManifestError(SaxlError, ValueError):
    pass
