"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SkewPBWError(Exception):
    """Base class for all library errors."""


class RingMismatchError(SkewPBWError, ValueError):
    pass


class NotAUnitError(SkewPBWError, ArithmeticError):
    pass


class InvalidDenominatorError(SkewPBWError, ValueError):
    pass


class PresentationMismatchError(SkewPBWError, ValueError):
    pass


class InvalidPresentationError(SkewPBWError, ValueError):
    """Raised at construction when a presentation fails its checks.

    The failing report is kept on ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UndefinedLeaderError(SkewPBWError, ValueError):
    pass


class UnsupportedFractionFieldError(SkewPBWError, NotImplementedError):
    pass


class InvalidParameterMatrixError(SkewPBWError, ValueError):
    pass


class MissingInverseError(SkewPBWError, ValueError):
    pass


class NegativeExponentError(SkewPBWError, ValueError):
    pass


class RewriteLimitError(SkewPBWError, RuntimeError):
    pass


class ParseError(SkewPBWError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class EndomorphismError(SkewPBWError, ValueError):
    pass


class FractionMismatchError(SkewPBWError, ValueError):
    """Fractions of different sides or multiplicative sets were combined."""
