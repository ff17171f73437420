"""Vector helpers over triples of jets (log-chart vectors with derivatives)."""

from __future__ import annotations

from typing import Sequence

from .jet import Jet
from .mulvec import MulVec3

JetVec = tuple[Jet, Jet, Jet]


def dot(a: Sequence[Jet], b: Sequence[Jet]) -> Jet:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a: Sequence[Jet], b: Sequence[Jet]) -> JetVec:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def scale(k, a: Sequence[Jet]) -> JetVec:
    return (a[0] * k, a[1] * k, a[2] * k)


def add(a: Sequence[Jet], b: Sequence[Jet]) -> JetVec:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def sub(a: Sequence[Jet], b: Sequence[Jet]) -> JetVec:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def neg(a: Sequence[Jet]) -> JetVec:
    return (-a[0], -a[1], -a[2])


def d(a: Sequence[Jet]) -> JetVec:
    """Componentwise derivative."""
    return (a[0].derivative(), a[1].derivative(), a[2].derivative())


def values(a: Sequence[Jet]) -> tuple[float, float, float]:
    return (a[0].value, a[1].value, a[2].value)


def to_vec(a: Sequence[Jet]) -> MulVec3:
    return MulVec3.from_logs(values(a))
