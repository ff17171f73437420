"""Exception hierarchy shared by every mulgeo module."""

from __future__ import annotations


class MulGeoError(Exception):
    """Base class for all library errors."""


class RangeError(MulGeoError, OverflowError):
    """A log-image left the finite floating-point range."""


class MulZeroDivisionError(MulGeoError, ZeroDivisionError):
    """Division by the multiplicative zero 0* (the real number 1)."""


class DomainError(MulGeoError, ValueError):
    """An argument lies outside the domain of a multiplicative function."""


class PoleError(DomainError):
    """Evaluation hit a pole (e.g. mtan where cos(log x) = 0)."""


class PreconditionError(MulGeoError, ValueError):
    """A documented precondition of an operation does not hold."""


class UnsupportedError(MulGeoError, ValueError):
    """The requested feature (e.g. derivative order) is not supported."""


class QuadratureError(MulGeoError, ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class UndefinedFrameError(MulGeoError, ArithmeticError):
    """The Frenet frame is undefined because the curvature vanishes."""


class NotNaturalError(PreconditionError):
    """The curve is not naturally parametrized at the requested parameter."""


class ReparametrizationError(MulGeoError, ArithmeticError):
    """Numerical arc-length reparametrization failed (non-monotone arc length)."""


class ClassificationError(MulGeoError, ArithmeticError):
    """Too many grid samples failed during helix classification."""


class ParseError(MulGeoError, ValueError):
    """Syntax error in a curve expression.

    Attributes:
        offset: byte offset of the offending token in the source text.
        expected: sorted tuple of token spellings that would have been accepted.
        text: the full source text.
    """

    def __init__(self, message: str, offset: int, expected=(), text: str = ""):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        self.text = text
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)

    def caret(self) -> str:
        """Two-line diagnostic: the source and a caret under the offset."""
        return f"{self.text}\n{' ' * self.offset}^"


class EvalError(DomainError):
    """Domain or pole failure raised while evaluating an expression node.

    Carries the source span of the failing node when it is known.
    """

    def __init__(self, message: str, span: tuple[int, int] | None = None):
        self.span = span
        if span is not None:
            message = f"{message} (source span {span[0]}..{span[1]})"
        super().__init__(message)
