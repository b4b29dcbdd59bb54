"""Exception hierarchy shared by every polyleaf module."""

from __future__ import annotations


class PolyleafError(Exception):
    """Base class for all errors raised by polyleaf."""


# --- exact algebra -------------------------------------------------------

class ZeroPolynomialError(PolyleafError, ValueError):
    pass


class BothZeroError(PolyleafError, ValueError):
    pass


class InexactDivisionError(PolyleafError, ArithmeticError):
    pass


# --- power detection -----------------------------------------------------

class NotAPowerError(PolyleafError):
    """Raised when a requested root order does not divide the power order."""


class CertificateFailedError(PolyleafError):
    """Numeric breakdown while building a series root; not a refutation."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


# --- decomposition / leaves ----------------------------------------------

class ConstantPError(PolyleafError, ValueError):
    pass


class HypothesisViolatedError(PolyleafError):
    """P is constant or a proper power in the formal power series ring."""


class LeafSamplingFailedError(PolyleafError):
    pass


class EmptyLeafSampleError(LeafSamplingFailedError):
    pass


# --- numeric kernel ------------------------------------------------------

class NumericError(PolyleafError):
    pass


class NoConvergenceError(NumericError):
    pass


class DegreeZeroError(NumericError, ValueError):
    pass


class NumericOverflowError(NumericError, OverflowError):
    pass


# --- expression parsing --------------------------------------------------

class ParseError(PolyleafError, ValueError):
    """Input error carrying the offending byte span ``(start, end)``."""

    kind = "ParseError"

    def __init__(self, message: str, span: tuple[int, int] | None = None):
        super().__init__(message)
        self.span = span

    def __str__(self) -> str:
        msg = super().__str__()
        if self.span is None:
            return msg
        return f"{msg} at {self.span[0]}..{self.span[1]}"


class ExprSyntaxError(ParseError):
    kind = "SyntaxError"


class NegativeExponentError(ParseError):
    kind = "NegativeExponent"


class UnknownVariableError(ParseError):
    kind = "UnknownVariable"


class DegreeLimitExceededError(ParseError):
    kind = "DegreeLimitExceeded"
