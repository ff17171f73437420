"""Classical referee in the log chart.

A multiplicative curve ``x`` corresponds to the classical curve
``y(u) = logvec x(e^u)``, and every multiplicative invariant of ``x`` has the
classical invariant of ``y`` as its log-image.  This module computes the
classical side from scratch with the textbook formulas for an arbitrary
parameter::

    kappa = |y' x y''| / |y'|^3,   tau = det(y', y'', y''') / |y' x y''|^2,
    t = y' / |y'|,  b = (y' x y'') / |y' x y''|,  n = b x t,  d/ds = d/du / |y'|

so it needs no arc-length reparametrization.  Only the jet arithmetic is
shared with the multiplicative pipeline.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .curve import LogChartCurve, NaturalCurve, base_param, natural_frame
from .errors import MulGeoError, UndefinedFrameError
from .helix import helix_jets
from .indicatrix import IndicatrixKind, indicatrix_curvatures_closed
from .jet import Jet
from .mularith import MulScalar
from .mulvec import MulVec3

__all__ = [
    "ClassicalCurveView",
    "ClassicalFrenet",
    "LiftedCurve",
    "to_log_chart",
    "lift",
    "classical_frenet",
    "classical_invariants",
    "compare",
    "Discrepancy",
    "DiscrepancyTable",
]

# Enough derivatives for psi: n involves y'', and psi differentiates the
# torsion/curvature ratio of n once more than its torsion does.
ORACLE_ORDER = 7

Jets3 = tuple[Jet, Jet, Jet]


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _deriv(a):
    return tuple(x.derivative() for x in a)


def _norm(a) -> Jet:
    return _dot(a, a).sqrt()


def _unit(a):
    r = _norm(a)
    return tuple(x / r for x in a)


@dataclass(frozen=True)
class ClassicalCurveView:
    """A classical curve given by exact jets ``y(u, order)``."""

    y: Callable[[float, int], Jets3]
    u_domain: tuple[float, float]
    name: str = "classical"

    def jets(self, u: float, order: int) -> Jets3:
        return self.y(u, order)

    def point(self, u: float) -> tuple[float, float, float]:
        return tuple(x.value for x in self.y(u, 0))  # type: ignore[return-value]


class LiftedCurve(LogChartCurve):
    """Multiplicative curve whose log-image is a given classical view."""

    def __init__(self, view: ClassicalCurveView):
        self.view = view
        self.name = view.name
        self.u_domain = view.u_domain

    def log_jets(self, u: float, order: int):
        return self.view.jets(u, order)


def to_log_chart(c: LogChartCurve) -> ClassicalCurveView:
    """Exact log chart of ``c``; a reparametrized curve contributes its base."""
    base = c.base if isinstance(c, NaturalCurve) else c
    return ClassicalCurveView(base.log_jets, tuple(base.u_domain), base.name)


def lift(v: ClassicalCurveView) -> LiftedCurve:
    return LiftedCurve(v)


@dataclass(frozen=True)
class ClassicalFrenet:
    u: float
    t: tuple[float, float, float]
    n: tuple[float, float, float]
    b: tuple[float, float, float]
    kappa: float
    tau: float
    speed: float


class _Curvatures:
    """Jets of speed, kappa and tau of a curve given in any parameter."""

    def __init__(self, y: Sequence[Jet]):
        d1 = _deriv(y)
        d2 = _deriv(d1)
        d3 = _deriv(d2)
        c = _cross(d1, d2)
        cc = _dot(c, c)
        if cc.value <= 1e-24:
            raise UndefinedFrameError("classical curvature vanishes")
        self.speed = _norm(d1)
        self.kappa = cc.sqrt() / self.speed**3
        self.tau = _dot(c, d3) / cc
        self.t = _unit(d1)
        self.b = _unit(c)
        self.n = _cross(self.b, self.t)

    def d_ds(self, q: Jet) -> Jet:
        return q.derivative() / self.speed

    def slant(self) -> Jet:
        k2 = self.kappa * self.kappa
        return k2 / (k2 + self.tau * self.tau) ** 1.5 * self.d_ds(self.tau / self.kappa)


def classical_frenet(v: ClassicalCurveView, u: float) -> ClassicalFrenet:
    """Textbook Frenet apparatus of ``y`` at ``u`` (any parameter)."""
    cv = _Curvatures(v.jets(u, 3))
    val = lambda a: tuple(x.value for x in a)  # noqa: E731
    return ClassicalFrenet(u, val(cv.t), val(cv.n), val(cv.b), cv.kappa.value, cv.tau.value, cv.speed.value)


def classical_invariants(v: ClassicalCurveView, u: float) -> dict[str, float]:
    """All classical quantities at ``u``: frame, curvatures, helix functions and indicatrix curvatures."""
    y = v.jets(u, ORACLE_ORDER)
    cv = _Curvatures(y)
    out: dict[str, float] = {}
    for name, vec in (("t", cv.t), ("n", cv.n), ("b", cv.b)):
        for i in range(3):
            out[f"{name}{i + 1}"] = vec[i].value
    out["kappa"] = cv.kappa.value
    out["tau"] = cv.tau.value
    out["f"] = (cv.tau / cv.kappa).value
    out["sigma"] = cv.slant().value
    ind = {}
    for kind, vec in (("tangent", cv.t), ("normal", cv.n), ("binormal", cv.b)):
        try:
            ind[kind] = icv = _Curvatures(vec)
        except UndefinedFrameError:
            continue  # e.g. the binormal indicatrix of a planar curve is a point
        out[f"kappa_{kind}"] = icv.kappa.value
        out[f"tau_{kind}"] = icv.tau.value
    nv = ind["normal"]
    out["gamma"] = (nv.tau / nv.kappa).value
    out["psi"] = nv.slant().value
    return out


def _mult_invariants(c: LogChartCurve, s: MulScalar) -> dict[str, float]:
    _, fr, _ = natural_frame(c, base_param(c, s), 6, with_h=False)
    hj = helix_jets(fr)
    out: dict[str, float] = {}
    for name, vec in (("t", fr.t), ("n", fr.n), ("b", fr.b)):
        for i in range(3):
            out[f"{name}{i + 1}"] = vec[i].value
    out.update(kappa=fr.kappa.value, tau=fr.tau.value, f=hj.f.value, sigma=hj.sigma.value, gamma=hj.gamma.value)
    out["psi"] = hj.psi.value
    for kind in IndicatrixKind:
        if kind is IndicatrixKind.BINORMAL and fr.tau.value <= 0.0:
            continue  # closed forms assume tau > 0*
        try:
            k, t = indicatrix_curvatures_closed(c, kind, s)
        except MulGeoError:
            continue
        out[f"kappa_{kind.value}"] = k.logval
        out[f"tau_{kind.value}"] = t.logval
    return out


@dataclass(frozen=True)
class Discrepancy:
    s: float
    quantity: str
    mult_logval: float
    classical: float

    @property
    def absdiff(self) -> float:
        return abs(self.mult_logval - self.classical)


@dataclass
class DiscrepancyTable:
    curve: str
    rows: list[Discrepancy]
    failures: list[dict]

    @property
    def max_absdiff(self) -> float:
        return max((r.absdiff for r in self.rows), default=0.0)

    @property
    def mean_absdiff(self) -> float:
        return math.fsum(r.absdiff for r in self.rows) / len(self.rows) if self.rows else 0.0

    def max_by_quantity(self) -> dict[str, float]:
        out: dict[str, float] = {}
        for r in self.rows:
            out[r.quantity] = max(out.get(r.quantity, 0.0), r.absdiff)
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "quantity", "mult_logval", "classical", "absdiff"])
        for r in self.rows:
            w.writerow([repr(r.s), r.quantity, repr(r.mult_logval), repr(r.classical), repr(r.absdiff)])
        return buf.getvalue()

    def summary(self) -> str:
        n = len({r.s for r in self.rows})
        return f"curve={self.curve} max_absdiff={self.max_absdiff:.3e} mean_absdiff={self.mean_absdiff:.3e} n={n} failed={len(self.failures)}"


def compare(c: LogChartCurve, grid: Sequence[MulScalar]) -> DiscrepancyTable:
    """Per-sample ``|mult logval - classical|`` for every quantity both sides compute.

    ``grid`` is in the parameter of ``c``.  The classical side evaluates the
    base curve at the same points.  Samples where either side fails are
    listed under ``failures`` instead of aborting the table.
    """
    view = to_log_chart(c)
    rows: list[Discrepancy] = []
    failures: list[dict] = []
    for s in grid:
        try:
            mult = _mult_invariants(c, s)
            cl = classical_invariants(view, base_param(c, s))
        except MulGeoError as exc:
            failures.append({"s": s.logval, "error": f"{type(exc).__name__}: {exc}"})
            continue
        for q, mv in mult.items():
            if q in cl:
                rows.append(Discrepancy(s.logval, q, mv, cl[q]))
    return DiscrepancyTable(c.name, rows, failures)


def classical_point(v: ClassicalCurveView, u: float) -> MulVec3:
    """Point of the lifted curve at ``s = e^u``."""
    return MulVec3.from_logs(v.point(u))
