"""The multiplicative scalar field R* = (0, inf) with exp as generator.

A :class:`MulScalar` is stored by its classical logarithm (``logval``).  Every
multiplicative operation is then a single classical operation on log-images:

=========  ====================  ==============
operation  log-image             positive real
=========  ====================  ==============
a +* b     log a + log b         a * b
a -* b     log a - log b         a / b
a .* b     log a * log b         a ** log b
a /* b     log a / log b         a ** (1/log b)
=========  ====================  ==============

The multiplicative zero ``0*`` is the real 1 (logval 0) and the unit ``1*`` is
e (logval 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, MulZeroDivisionError, PoleError, RangeError

__all__ = [
    "MulScalar",
    "ZERO",
    "ONE",
    "madd",
    "msub",
    "mneg",
    "mmul",
    "mdiv",
    "minv",
    "mabs",
    "mpow",
    "msqrt",
    "msin",
    "mcos",
    "mtan",
    "marccos",
    "compare",
    "is_mpositive",
    "format_logval",
]

# Below this |cos(log x)| mtan is treated as sitting on a pole.
POLE_EPS = 1e-15
# Slack allowed outside [-1, 1] for marccos before raising (rounding noise).
ARCCOS_SLACK = 1e-12


def _checked(logval: float) -> float:
    if not math.isfinite(logval):
        raise RangeError(f"log-image {logval!r} is not finite")
    return logval


@dataclass(frozen=True, order=True)
class MulScalar:
    """An element of R*, represented by its log-image."""

    logval: float

    def __post_init__(self):
        object.__setattr__(self, "logval", _checked(float(self.logval)))

    @classmethod
    def from_positive_real(cls, x: float) -> "MulScalar":
        if not (x > 0.0) or not math.isfinite(x):
            raise DomainError(f"multiplicative numbers are positive finite reals, got {x!r}")
        return cls(math.log(x))

    def to_positive_real(self) -> float:
        try:
            return math.exp(self.logval)
        except OverflowError as exc:
            raise RangeError(f"e^{self.logval} overflows a float") from exc

    @property
    def value(self) -> float:
        return self.to_positive_real()

    def __str__(self) -> str:
        return format_logval(self.logval)

    # Operators follow the arithmetic of R*, not that of the positive reals.
    def __add__(self, other: "MulScalar") -> "MulScalar":
        return madd(self, other)

    def __sub__(self, other: "MulScalar") -> "MulScalar":
        return msub(self, other)

    def __mul__(self, other: "MulScalar") -> "MulScalar":
        return mmul(self, other)

    def __truediv__(self, other: "MulScalar") -> "MulScalar":
        return mdiv(self, other)

    def __neg__(self) -> "MulScalar":
        return mneg(self)

    def __pow__(self, k: float) -> "MulScalar":
        return mpow(self, k)

    def __abs__(self) -> "MulScalar":
        return mabs(self)


ZERO = MulScalar(0.0)
ONE = MulScalar(1.0)


def format_logval(logval: float, raw: bool = False, digits: int = 17) -> str:
    """Render a log-image as ``e^r`` (default) or as the raw positive real.

    Integral log-images print without a fractional part, so e^6 reads ``e^6``.
    """
    if raw:
        return repr(math.exp(logval))
    if logval == 0.0:
        return "e^0"
    if logval.is_integer() and abs(logval) < 1e15:
        return f"e^{int(logval)}"
    return f"e^{logval:.{digits}g}"


def madd(a: MulScalar, b: MulScalar) -> MulScalar:
    return MulScalar(a.logval + b.logval)


def msub(a: MulScalar, b: MulScalar) -> MulScalar:
    return MulScalar(a.logval - b.logval)


def mneg(a: MulScalar) -> MulScalar:
    return MulScalar(-a.logval)


def mmul(a: MulScalar, b: MulScalar) -> MulScalar:
    return MulScalar(a.logval * b.logval)


def mdiv(a: MulScalar, b: MulScalar) -> MulScalar:
    if b.logval == 0.0:
        raise MulZeroDivisionError("division by the multiplicative zero 0* = 1")
    return MulScalar(a.logval / b.logval)


def minv(a: MulScalar) -> MulScalar:
    """Multiplicative reciprocal a^{-1*} = e^{1/log a}."""
    if a.logval == 0.0:
        raise MulZeroDivisionError("0* = 1 has no multiplicative inverse")
    return MulScalar(1.0 / a.logval)


def mabs(a: MulScalar) -> MulScalar:
    return a if a.logval >= 0.0 else MulScalar(-a.logval)


def mpow(a: MulScalar, k: float) -> MulScalar:
    """Multiplicative power a^{k*} = e^{(log a)^k}.

    Integer exponents are allowed for every a; other exponents need a >= 0*
    so that (log a)^k stays real.
    """
    x = a.logval
    if float(k).is_integer():
        k = int(k)
        if k < 0 and x == 0.0:
            raise MulZeroDivisionError("negative power of the multiplicative zero")
        return MulScalar(x**k)
    if x < 0.0:
        raise DomainError(f"non-integer power {k} of the multiplicative negative e^{x}")
    return MulScalar(x**k)


def msqrt(a: MulScalar) -> MulScalar:
    if a.logval < 0.0:
        raise DomainError("multiplicative square root of a multiplicative negative number")
    return MulScalar(math.sqrt(a.logval))


def msin(theta: MulScalar) -> MulScalar:
    return MulScalar(math.sin(theta.logval))


def mcos(theta: MulScalar) -> MulScalar:
    return MulScalar(math.cos(theta.logval))


def mtan(theta: MulScalar) -> MulScalar:
    c = math.cos(theta.logval)
    if abs(c) < POLE_EPS:
        raise PoleError(f"mtan pole at e^{theta.logval}")
    return MulScalar(math.sin(theta.logval) / c)


def marccos(a: MulScalar) -> MulScalar:
    x = a.logval
    if abs(x) > 1.0 + ARCCOS_SLACK:
        raise DomainError(f"marccos needs log a in [-1, 1], got {x}")
    return MulScalar(math.acos(max(-1.0, min(1.0, x))))


def compare(a: MulScalar, b: MulScalar) -> int:
    """Three-way comparison: -1, 0 or 1 as a is less than, equal to, greater than b."""
    return (a.logval > b.logval) - (a.logval < b.logval)


def is_mpositive(a: MulScalar) -> bool:
    return a.logval > 0.0
