"""Multiplicative vectors in R*^3.

``logvec(u) = (log u1, log u2, log u3)`` is an isometric isomorphism onto
Euclidean R^3, so every operation here is its classical counterpart on the
log-images.  :func:`vadd`, :func:`smul`, :func:`minner` and :func:`mnorm` also
accept componentwise n-vectors given as sequences of :class:`MulScalar`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import PreconditionError
from .mularith import MulScalar, marccos

__all__ = [
    "MulVec3",
    "ZERO_VEC",
    "vadd",
    "vsub",
    "vneg",
    "smul",
    "minner",
    "mnorm",
    "is_morthogonal",
    "mcross",
    "mangle",
    "ORTHO_TOL",
]

ORTHO_TOL = 1e-9
UNIT_TOL = 1e-9


@dataclass(frozen=True)
class MulVec3:
    x: MulScalar
    y: MulScalar
    z: MulScalar

    @classmethod
    def from_logs(cls, logs: Sequence[float]) -> "MulVec3":
        a, b, c = logs
        return cls(MulScalar(a), MulScalar(b), MulScalar(c))

    @classmethod
    def from_positive_reals(cls, values: Sequence[float]) -> "MulVec3":
        return cls(*(MulScalar.from_positive_real(v) for v in values))

    @property
    def logvec(self) -> tuple[float, float, float]:
        return (self.x.logval, self.y.logval, self.z.logval)

    def to_positive_reals(self) -> tuple[float, float, float]:
        return (self.x.value, self.y.value, self.z.value)

    def __iter__(self) -> Iterator[MulScalar]:
        return iter((self.x, self.y, self.z))

    def __len__(self) -> int:
        return 3

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"

    def __add__(self, other: "MulVec3") -> "MulVec3":
        return vadd(self, other)

    def __sub__(self, other: "MulVec3") -> "MulVec3":
        return vsub(self, other)

    def __neg__(self) -> "MulVec3":
        return vneg(self)


ZERO_VEC = MulVec3(MulScalar(0.0), MulScalar(0.0), MulScalar(0.0))


def _logs(u) -> list[float]:
    return [c.logval for c in u]


def _rebuild(u, logs):
    if isinstance(u, MulVec3):
        return MulVec3.from_logs(logs)
    return tuple(MulScalar(v) for v in logs)


def _check_dims(u, v) -> None:
    if len(u) != len(v):
        raise PreconditionError(f"dimension mismatch: {len(u)} vs {len(v)}")


def vadd(u, v):
    _check_dims(u, v)
    return _rebuild(u, [a + b for a, b in zip(_logs(u), _logs(v))])


def vsub(u, v):
    _check_dims(u, v)
    return _rebuild(u, [a - b for a, b in zip(_logs(u), _logs(v))])


def vneg(u):
    return _rebuild(u, [-a for a in _logs(u)])


def smul(k: MulScalar, u):
    """Scalar multiple k .* u = e^{log k log u}."""
    return _rebuild(u, [k.logval * a for a in _logs(u)])


def minner(u, v) -> MulScalar:
    _check_dims(u, v)
    return MulScalar(math.fsum(a * b for a, b in zip(_logs(u), _logs(v))))


def mnorm(u) -> MulScalar:
    return MulScalar(math.sqrt(math.fsum(a * a for a in _logs(u))))


def is_morthogonal(u, v, tol: float = ORTHO_TOL) -> bool:
    return abs(minner(u, v).logval) <= tol


def mcross(u: MulVec3, v: MulVec3) -> MulVec3:
    a1, a2, a3 = u.logvec
    b1, b2, b3 = v.logvec
    return MulVec3.from_logs((a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1))


def mangle(u: MulVec3, v: MulVec3, tol: float = UNIT_TOL) -> MulScalar:
    """Multiplicative angle between two multiplicative unit vectors, in [1, e^pi].

    Raises:
        PreconditionError: if either argument is not a unit vector within ``tol``.
    """
    for name, w in (("u", u), ("v", v)):
        if abs(mnorm(w).logval - 1.0) > tol:
            raise PreconditionError(f"mangle needs unit vectors; |{name}|* = {mnorm(w)}")
    return marccos(minner(u, v))
