"""Truncated Taylor arithmetic (jets) for exact forward-mode derivatives.

A :class:`Jet` of order N holds the Taylor coefficients ``c[0..N]`` of a
function about a base point, so ``c[k] = g^(k)(u0) / k!``.  Arithmetic and
the elementary functions propagate those coefficients with the usual
recurrences, which gives derivatives free of truncation or step-size error.

In mulgeo a jet always represents a log-image ``g(u) = log f(e^u)``; its k-th
u-derivative is the log-image of the k-th multiplicative derivative.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import DomainError, MulZeroDivisionError, PoleError

__all__ = ["Jet", "as_jet"]


class Jet:
    """Taylor coefficients of a scalar function, truncated at ``order``."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[float]):
        self.c = [float(x) for x in coeffs]
        if not self.c:
            raise ValueError("a jet needs at least one coefficient")

    # --- construction -------------------------------------------------
    @classmethod
    def constant(cls, value: float, order: int) -> "Jet":
        return cls([value] + [0.0] * order)

    @classmethod
    def variable(cls, value: float, order: int) -> "Jet":
        """The identity function u -> u expanded about ``value``."""
        if order == 0:
            return cls([value])
        return cls([value, 1.0] + [0.0] * (order - 1))

    @classmethod
    def from_derivatives(cls, derivs: Sequence[float]) -> "Jet":
        return cls([d / math.factorial(k) for k, d in enumerate(derivs)])

    # --- inspection ---------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.c) - 1

    @property
    def value(self) -> float:
        return self.c[0]

    def deriv(self, k: int) -> float:
        """k-th derivative at the base point."""
        if k > self.order:
            raise DomainError(f"jet of order {self.order} has no derivative {k}")
        return self.c[k] * math.factorial(k)

    def derivatives(self) -> list[float]:
        return [x * math.factorial(k) for k, x in enumerate(self.c)]

    def derivative(self) -> "Jet":
        """The jet of g' (one order lower)."""
        if self.order == 0:
            raise DomainError("cannot differentiate an order-0 jet")
        return Jet([(k + 1) * self.c[k + 1] for k in range(self.order)])

    def antiderivative(self, value: float = 0.0) -> "Jet":
        """The jet of the primitive taking ``value`` at the base point."""
        return Jet([value] + [x / (k + 1) for k, x in enumerate(self.c)])

    def truncate(self, order: int) -> "Jet":
        return Jet(self.c[: order + 1])

    def __repr__(self) -> str:
        return f"Jet({self.c!r})"

    # --- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "Jet":
        if isinstance(other, Jet):
            return other
        return Jet.constant(other, self.order)

    def __neg__(self) -> "Jet":
        return Jet([-x for x in self.c])

    def __add__(self, other) -> "Jet":
        if not isinstance(other, Jet):
            return Jet([self.c[0] + other] + self.c[1:])
        n = min(len(self.c), len(other.c))
        return Jet([self.c[k] + other.c[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> "Jet":
        if not isinstance(other, Jet):
            return Jet([self.c[0] - other] + self.c[1:])
        n = min(len(self.c), len(other.c))
        return Jet([self.c[k] - other.c[k] for k in range(n)])

    def __rsub__(self, other) -> "Jet":
        return (-self) + other

    def __mul__(self, other) -> "Jet":
        if not isinstance(other, Jet):
            return Jet([x * other for x in self.c])
        a, b = self.c, other.c
        n = min(len(a), len(b))
        return Jet([sum(a[j] * b[k - j] for j in range(k + 1)) for k in range(n)])

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Jet":
        if not isinstance(other, Jet):
            if other == 0.0:
                raise MulZeroDivisionError("jet division by zero")
            return Jet([x / other for x in self.c])
        a, b = self.c, other.c
        if b[0] == 0.0:
            raise MulZeroDivisionError("jet division by a jet with zero value")
        n = min(len(a), len(b))
        q: list[float] = []
        for k in range(n):
            acc = a[k] - sum(b[j] * q[k - j] for j in range(1, k + 1))
            q.append(acc / b[0])
        return Jet(q)

    def __rtruediv__(self, other) -> "Jet":
        return self._coerce(other) / self

    def __pow__(self, p: float) -> "Jet":
        if float(p).is_integer() and p >= 0:
            return self._ipow(int(p))
        a = self.c
        if a[0] == 0.0:
            raise DomainError(f"power {p} of a jet with zero value is not differentiable")
        if a[0] < 0.0 and not float(p).is_integer():
            raise DomainError(f"non-integer power {p} of a negative value")
        # a * b' = p * a' * b
        out = [a[0] ** p]
        for k in range(1, len(a)):
            acc = sum(((p + 1.0) * j - k) * a[j] * out[k - j] for j in range(1, k + 1))
            out.append(acc / (k * a[0]))
        return Jet(out)

    def _ipow(self, n: int) -> "Jet":
        result = Jet.constant(1.0, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # --- elementary functions -----------------------------------------
    def sqrt(self) -> "Jet":
        if self.c[0] <= 0.0:
            raise DomainError(f"jet square root needs a positive value, got {self.c[0]}")
        return self**0.5

    def exp(self) -> "Jet":
        a = self.c
        out = [math.exp(a[0])]
        for k in range(1, len(a)):
            out.append(sum(j * a[j] * out[k - j] for j in range(1, k + 1)) / k)
        return Jet(out)

    def log(self) -> "Jet":
        a = self.c
        if a[0] <= 0.0:
            raise DomainError(f"jet logarithm needs a positive value, got {a[0]}")
        out = [math.log(a[0])]
        for k in range(1, len(a)):
            acc = a[k] - sum(j * out[j] * a[k - j] for j in range(1, k)) / k
            out.append(acc / a[0])
        return Jet(out)

    def sin_cos(self) -> tuple["Jet", "Jet"]:
        a = self.c
        s = [math.sin(a[0])]
        c = [math.cos(a[0])]
        for k in range(1, len(a)):
            s.append(sum(j * a[j] * c[k - j] for j in range(1, k + 1)) / k)
            c.append(-sum(j * a[j] * s[k - j] for j in range(1, k + 1)) / k)
        return Jet(s), Jet(c)

    def sin(self) -> "Jet":
        return self.sin_cos()[0]

    def cos(self) -> "Jet":
        return self.sin_cos()[1]

    def tan(self) -> "Jet":
        s, c = self.sin_cos()
        if abs(c.c[0]) < 1e-15:
            raise PoleError(f"tan pole at {self.c[0]}")
        return s / c

    # --- series composition -------------------------------------------
    def compose(self, inner: "Jet") -> "Jet":
        """Jet of g(u0 + d(h)) where ``inner`` is the jet of d with d(h0) = 0.

        ``self`` is expanded about u0; the result is expanded about h0.
        """
        if inner.c[0] != 0.0:
            raise ValueError("inner series must vanish at the base point")
        n = min(self.order, inner.order)
        result = Jet.constant(self.c[n], n)
        inner = inner.truncate(n)
        for k in range(n - 1, -1, -1):
            result = result * inner + self.c[k]
        return result

    def inverse_series(self) -> "Jet":
        """Jet of d(h) with self(u0 + d(h)) = h, expanded about h0 = self(u0).

        Requires a nonzero first derivative; the result has d(h0) = 0.
        """
        b = self.c
        n = self.order
        if n == 0:
            return Jet([0.0])
        if b[1] == 0.0:
            raise DomainError("series inversion needs a nonzero slope")
        # Fixed-point iteration fixes one more coefficient per pass.
        eps = Jet.variable(0.0, n)
        higher = Jet([0.0, 0.0] + b[2:])
        d = eps / b[1]
        for _ in range(n):
            d = (eps - higher.compose(d)) / b[1]
        return d


def as_jet(x, order: int) -> Jet:
    return x if isinstance(x, Jet) else Jet.constant(float(x), order)
