"""Multiplicative parametric curves and their Frenet apparatus.

A curve is handled through its log chart: ``y(u) = logvec x(e^u)``.  Every
curve type exposes :meth:`LogChartCurve.log_jets`, the Taylor jets of the three
log-image components about ``u``; all geometry is derived from those jets.

For a naturally parametrized curve (multiplicative speed ``1*``)::

    t = x*,  n = x** /* |x**|*,  b = t x* n,
    kappa = |x**|*,  tau = <n*, b>*

which in the log chart read ``t = y'``, ``n = y''/|y''|``, ``b = t x n``,
``log kappa = |y''|`` and ``log tau = <n', b>``.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_right
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import PchipInterpolator

from .errors import (
    DomainError,
    NotNaturalError,
    PreconditionError,
    ReparametrizationError,
    UndefinedFrameError,
)
from .jet import Jet
from .jetvec import JetVec, cross as _cross, d as _d, dot as _dot, to_vec as _vec, values as _values
from .mulcalc.expr import CurveExpr, evaluate, evaluate_log_jet, parse
from .mulcalc.quadrature import adaptive_simpson
from .mularith import MulScalar
from .mulvec import MulVec3, mnorm, vsub

__all__ = [
    "LogChartCurve",
    "MulCurve",
    "NaturalCurve",
    "TransformedCurve",
    "IntrinsicCurve",
    "FrenetSample",
    "FrameJets",
    "MulSphere",
    "UNIT_SPHERE",
    "velocity",
    "speed",
    "is_regular",
    "is_natural",
    "arclength",
    "reparam_natural",
    "frame_jets",
    "frame_from_jets",
    "natural_frame",
    "base_param",
    "frenet",
    "frenet_residuals",
    "on_sphere",
    "log_grid",
    "NATURAL_TOL",
    "KAPPA_TOL",
]

NATURAL_TOL = 1e-6
KAPPA_TOL = 1e-10
FRENET_ORDER = 3

# ---------------------------------------------------------------------------
# curve types
# ---------------------------------------------------------------------------


class LogChartCurve:
    """Base class: a curve known through the jets of its log-image."""

    name: str = "curve"
    u_domain: tuple[float, float] = (-math.inf, math.inf)

    def log_jets(self, u: float, order: int) -> JetVec:
        raise NotImplementedError

    @property
    def domain(self) -> tuple[MulScalar, MulScalar]:
        return (MulScalar(self.u_domain[0]), MulScalar(self.u_domain[1]))

    def point(self, s: MulScalar) -> MulVec3:
        return _vec(self.log_jets(s.logval, 0))

    def speed_at(self, u: float) -> float:
        d = _d(self.log_jets(u, 1))
        return math.sqrt(d[0].value ** 2 + d[1].value ** 2 + d[2].value ** 2)

    def contains(self, s: MulScalar, slack: float = 1e-9) -> bool:
        lo, hi = self.u_domain
        return lo - slack <= s.logval <= hi + slack


@dataclass(frozen=True, eq=False)
class MulCurve(LogChartCurve):
    """Curve given by three component expressions on a parameter interval."""

    components: tuple[CurveExpr, CurveExpr, CurveExpr]
    lo: MulScalar
    hi: MulScalar
    name: str = "curve"

    def __post_init__(self):
        if len(self.components) != 3:
            raise PreconditionError("a space curve needs exactly three components")
        if not self.lo.logval < self.hi.logval:
            raise PreconditionError(f"empty parameter domain [{self.lo}, {self.hi}]")

    @classmethod
    def from_strings(cls, x1: str, x2: str, x3: str, lo: float, hi: float, name: str = "curve") -> "MulCurve":
        """Build from expression texts and a domain given as positive reals."""
        return cls(
            (parse(x1), parse(x2), parse(x3)),
            MulScalar.from_positive_real(lo),
            MulScalar.from_positive_real(hi),
            name,
        )

    @classmethod
    def from_dict(cls, data: dict) -> "MulCurve":
        try:
            lo, hi = data["domain"]
            return cls.from_strings(data["x1"], data["x2"], data["x3"], lo, hi, data.get("name", "curve"))
        except KeyError as exc:
            raise PreconditionError(f"curve definition lacks key {exc}") from exc

    @classmethod
    def from_json(cls, path: str | Path) -> "MulCurve":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "x1": str(self.components[0]),
            "x2": str(self.components[1]),
            "x3": str(self.components[2]),
            "domain": [self.lo.value, self.hi.value],
        }

    @property
    def u_domain(self) -> tuple[float, float]:  # type: ignore[override]
        return (self.lo.logval, self.hi.logval)

    def point(self, s: MulScalar) -> MulVec3:
        return MulVec3(*(evaluate(c.ast, s) for c in self.components))

    def log_jets(self, u: float, order: int) -> JetVec:
        a, b, c = (evaluate_log_jet(x.ast, u, order) for x in self.components)
        return (a, b, c)


class TransformedCurve(LogChartCurve):
    """Rigid motion of a curve in the log chart: y -> R y + d.

    These are the isometries of E*^3, so every invariant is preserved.
    """

    def __init__(self, base: LogChartCurve, rotation, translation=(0.0, 0.0, 0.0), name: str | None = None):
        rot = np.asarray(rotation, dtype=float)
        if rot.shape != (3, 3) or not np.allclose(rot @ rot.T, np.eye(3), atol=1e-12):
            raise PreconditionError("rotation must be an orthogonal 3x3 matrix")
        self.base = base
        self.rotation = rot
        self.translation = tuple(float(x) for x in translation)
        self.name = name or f"{base.name}-moved"
        self.u_domain = base.u_domain

    def log_jets(self, u: float, order: int) -> JetVec:
        y = self.base.log_jets(u, order)
        r = self.rotation
        return tuple(
            y[0] * r[i, 0] + y[1] * r[i, 1] + y[2] * r[i, 2] + self.translation[i] for i in range(3)
        )  # type: ignore[return-value]


class IntrinsicCurve(LogChartCurve):
    """Natural curve with prescribed curvature and torsion.

    ``kappa`` and ``tau`` are expressions in ``s``; the curve starts at the
    origin with the standard frame at ``s = lo``.  The Frenet system is
    integrated once (DOP853 with dense output) for the base values, and the
    jets come from the exact Taylor recursion of the Frenet equations.
    """

    def __init__(self, kappa: str | CurveExpr, tau: str | CurveExpr, lo: float, hi: float, name: str = "intrinsic"):
        if not 0.0 < lo < hi:
            raise PreconditionError("domain must satisfy 0 < lo < hi")
        self.kappa = parse(kappa) if isinstance(kappa, str) else kappa
        self.tau = parse(tau) if isinstance(tau, str) else tau
        self.name = name
        self.u_domain = (math.log(lo), math.log(hi))

        def rhs(u, z):
            k = evaluate(self.kappa.ast, MulScalar(u)).logval
            w = evaluate(self.tau.ast, MulScalar(u)).logval
            t, n, b = z[3:6], z[6:9], z[9:12]
            return np.concatenate([t, k * n, -k * t + w * b, -w * n])

        z0 = np.array([0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1], dtype=float)
        sol = solve_ivp(rhs, self.u_domain, z0, method="DOP853", rtol=1e-13, atol=1e-13, dense_output=True)
        if not sol.success:
            raise DomainError(f"Frenet integration failed for {name}: {sol.message}")
        self._sol = sol

    def log_jets(self, u: float, order: int) -> JetVec:
        z = self._sol.sol(u)
        k = evaluate_log_jet(self.kappa.ast, u, order).c
        w = evaluate_log_jet(self.tau.ast, u, order).c
        t = [list(z[3 + i : 4 + i]) for i in range(3)]
        n = [list(z[6 + i : 7 + i]) for i in range(3)]
        b = [list(z[9 + i : 10 + i]) for i in range(3)]
        for m in range(order):
            for i in range(3):
                conv = lambda a, v: math.fsum(a[j] * v[i][m - j] for j in range(m + 1))  # noqa: E731
                t_next = conv(k, n) / (m + 1)
                n_next = (conv(w, b) - conv(k, t)) / (m + 1)
                b_next = -conv(w, n) / (m + 1)
                t[i].append(t_next)
                n[i].append(n_next)
                b[i].append(b_next)
        return tuple(Jet([z[i]] + [t[i][m] / (m + 1) for m in range(order)]) for i in range(3))  # type: ignore[return-value]


def _speed_jet(y: JetVec) -> Jet:
    d = _d(y)
    sq = _dot(d, d)
    if sq.value <= 0.0:
        raise DomainError("curve is singular (zero speed)")
    return sq.sqrt()


class NaturalCurve(LogChartCurve):
    """Arc-length reparametrization of a regular curve.

    The new parameter is ``h(u) = u_lo + int_{u_lo}^{u} |y'(w)| dw`` (so an
    already natural curve keeps its parameter).  A monotone PCHIP spline of
    ``u(h)`` over a cumulative-quadrature table supplies the starting guess,
    Newton's method on the exact arc-length integral refines it, and the jets
    in ``h`` are obtained by inverting the arc-length series and composing.
    No derivative is taken numerically.
    """

    _GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(20)

    def __init__(self, base: LogChartCurve, grid_size: int = 256, name: str | None = None):
        if grid_size < 2:
            raise PreconditionError("grid_size must be at least 2")
        lo, hi = base.u_domain
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise PreconditionError("reparametrization needs a bounded domain")
        self.base = base
        self.name = name or f"{base.name}-natural"
        us = np.linspace(lo, hi, grid_size + 1)
        speeds = [base.speed_at(float(u)) for u in us]
        if min(speeds) <= 1e-12:
            raise ReparametrizationError(f"{base.name} is not regular on its domain")
        hs = [lo]
        for a, b in zip(us[:-1], us[1:]):
            piece, _ = adaptive_simpson(base.speed_at, float(a), float(b), tol=1e-13)
            hs.append(hs[-1] + piece)
        hs_arr = np.asarray(hs)
        if np.any(np.diff(hs_arr) <= 0.0):
            raise ReparametrizationError(f"arc length of {base.name} is not strictly increasing")
        self._us = [float(u) for u in us]
        self._hs = [float(h) for h in hs_arr]
        self._spline = PchipInterpolator(hs_arr, us)
        self.u_domain = (lo, float(hs_arr[-1]))
        self.length = float(hs_arr[-1] - lo)

    # -- parameter maps ---------------------------------------------------
    def _arc_between(self, a: float, b: float) -> float:
        mid, half = 0.5 * (a + b), 0.5 * (b - a)
        return half * math.fsum(
            w * self.base.speed_at(mid + half * x) for x, w in zip(self._GL_NODES, self._GL_WEIGHTS)
        )

    def arc_of_base(self, u: float) -> float:
        """Arc parameter h of the base parameter u."""
        i = min(max(bisect_right(self._us, u) - 1, 0), len(self._us) - 2)
        return self._hs[i] + self._arc_between(self._us[i], u)

    def base_of_arc(self, h: float) -> float:
        """Base parameter u with arc parameter h (spline guess + Newton)."""
        u = float(self._spline(h))
        for _ in range(8):
            step = (self.arc_of_base(u) - h) / self.base.speed_at(u)
            u -= step
            if abs(step) <= 1e-15 * max(1.0, abs(u)):
                break
        return u

    def natural_param_of(self, s: MulScalar) -> MulScalar:
        return MulScalar(self.arc_of_base(s.logval))

    # -- jets -------------------------------------------------------------
    def jets_at_base(self, u: float, order: int, with_h: bool = True) -> tuple[float, JetVec]:
        """``(h, jets in h)`` at the point with base parameter ``u``.

        The jets do not depend on ``h`` itself; ``with_h=False`` skips the
        arc-length quadrature and returns ``nan`` for it.
        """
        y = self.base.log_jets(u, max(order, 1))  # the speed needs one derivative
        h0 = self.arc_of_base(u) if with_h else math.nan
        darc = _speed_jet(y).antiderivative(0.0)  # jet of h(w) - h0 about u
        du = darc.inverse_series()  # jet of u(h) - u about h0
        return h0, tuple(x.compose(du).truncate(order) for x in y)  # type: ignore[return-value]

    def log_jets(self, h: float, order: int) -> JetVec:
        return self.jets_at_base(self.base_of_arc(h), order)[1]

    def sample(self, n: int) -> list[tuple[MulScalar, MulVec3]]:
        """``n`` points equally spaced in arc length, as (parameter, point)."""
        lo, hi = self.u_domain
        return [
            (MulScalar(h), _vec(self.log_jets(float(h), 0))) for h in np.linspace(lo, hi, n)
        ]


# ---------------------------------------------------------------------------
# velocity, arc length, regularity
# ---------------------------------------------------------------------------


def log_grid(lo: MulScalar, hi: MulScalar, count: int) -> list[MulScalar]:
    """``count`` parameters uniformly spaced in u = log s, endpoints included."""
    if count < 2:
        raise PreconditionError("grid count must be >= 2")
    return [MulScalar(float(u)) for u in np.linspace(lo.logval, hi.logval, count)]


def velocity(c: LogChartCurve, s: MulScalar) -> MulVec3:
    return _vec(_d(c.log_jets(s.logval, 1)))


def speed(c: LogChartCurve, s: MulScalar) -> MulScalar:
    return mnorm(velocity(c, s))


def is_regular(c: LogChartCurve, grid: Iterable[MulScalar], tol: float = 1e-12) -> bool:
    return all(speed(c, s).logval > tol for s in grid)


def is_natural(c: LogChartCurve, grid: Iterable[MulScalar], tol: float = NATURAL_TOL) -> bool:
    return all(abs(speed(c, s).logval - 1.0) <= tol for s in grid)


def arclength(c: LogChartCurve, s0: MulScalar, s: MulScalar, tol: float = 1e-10) -> MulScalar:
    """Multiplicative arc length ``int*_{s0}^{s} |x*(t)|* .* d*t``.

    Raises:
        PreconditionError: if ``s0 > s``.
        QuadratureError: if the quadrature does not converge.
    """
    if s0.logval > s.logval:
        raise PreconditionError("arclength needs s0 <= s")
    value, _ = adaptive_simpson(c.speed_at, s0.logval, s.logval, tol)
    return MulScalar(value)


def reparam_natural(c: LogChartCurve, grid_size: int = 256) -> NaturalCurve:
    """Reparametrize ``c`` by multiplicative arc length (see :class:`NaturalCurve`)."""
    return NaturalCurve(c, grid_size)


# ---------------------------------------------------------------------------
# Frenet apparatus
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FrenetSample:
    s: MulScalar
    t: MulVec3
    n: MulVec3
    b: MulVec3
    kappa: MulScalar
    tau: MulScalar

    def as_record(self) -> dict:
        return {
            "s": self.s.logval,
            "t": list(self.t.logvec),
            "n": list(self.n.logvec),
            "b": list(self.b.logvec),
            "kappa": self.kappa.logval,
            "tau": self.tau.logval,
        }


@dataclass(frozen=True)
class FrameJets:
    """Frenet frame and curvatures of a natural curve as jets in u."""

    u: float
    t: JetVec
    n: JetVec
    b: JetVec
    kappa: Jet
    tau: Jet


def frame_from_jets(
    y: JetVec,
    u: float = 0.0,
    natural_tol: float = NATURAL_TOL,
    kappa_tol: float = KAPPA_TOL,
    name: str = "curve",
) -> FrameJets:
    """Frenet frame jets from the position jets of a natural curve.

    With position jets of order N, t carries N - 1 derivatives, n, b and
    kappa N - 2, tau N - 3.

    Raises:
        NotNaturalError: if ``| log speed - 1 | > natural_tol``.
        UndefinedFrameError: if ``log kappa <= kappa_tol``.
    """
    if min(x.order for x in y) < FRENET_ORDER:
        raise PreconditionError(f"Frenet apparatus needs position jets of order >= {FRENET_ORDER}")
    t = _d(y)
    spd = math.sqrt(sum(x.value**2 for x in t))
    if abs(spd - 1.0) > natural_tol:
        raise NotNaturalError(
            f"{name} is not naturally parametrized at u={u} (speed e^{spd}); use reparam_natural"
        )
    acc = _d(t)
    kappa_sq = _dot(acc, acc)
    if kappa_sq.value <= kappa_tol**2:
        raise UndefinedFrameError(f"curvature of {name} vanishes at u={u}")
    kappa = kappa_sq.sqrt()
    n = (acc[0] / kappa, acc[1] / kappa, acc[2] / kappa)
    b = _cross(t, n)
    tau = _dot(_d(n), b)
    return FrameJets(u, t, n, b, kappa, tau)


def frame_jets(
    c: LogChartCurve,
    u: float,
    order: int = FRENET_ORDER,
    natural_tol: float = NATURAL_TOL,
    kappa_tol: float = KAPPA_TOL,
) -> FrameJets:
    """Frenet frame jets of the natural curve ``c`` at ``u = log s``.

    See :func:`frame_from_jets` for the orders carried and the errors raised.
    """
    return frame_from_jets(c.log_jets(u, order), u, natural_tol, kappa_tol, c.name)


def base_param(c: LogChartCurve, s: MulScalar) -> float:
    """Log-chart parameter of the underlying curve at the point ``c(s)``."""
    return c.base_of_arc(s.logval) if isinstance(c, NaturalCurve) else s.logval


def natural_frame(
    c: LogChartCurve, u: float, order: int = FRENET_ORDER, with_h: bool = True
) -> tuple[float, FrameJets, Jet]:
    """Frame jets at the point of ``c`` with base parameter ``u`` (see :func:`base_param`).

    Returns ``(h, frame, dh)``: the natural parameter ``h`` of the point, the
    frame as jets in ``h``, and the jet of ``h(w) - h`` about ``w = u``, which
    maps jets in ``h`` back to the caller's parameter via :meth:`Jet.compose`.
    For a :class:`NaturalCurve` the caller's parameter is the base one, and
    ``with_h=False`` skips computing ``h`` (returned as nan).
    """
    if isinstance(c, NaturalCurve):
        y = c.base.log_jets(u, order)
        h, yh = c.jets_at_base(u, order, with_h)
        dh = _speed_jet(y).antiderivative(0.0)
        return h, frame_from_jets(yh, h, name=c.name), dh
    return u, frame_jets(c, u, order), Jet.variable(0.0, order)


def frenet(c: LogChartCurve, s: MulScalar, natural_tol: float = NATURAL_TOL, kappa_tol: float = KAPPA_TOL) -> FrenetSample:
    """Multiplicative Frenet trihedron and curvatures at ``s``."""
    fj = frame_jets(c, s.logval, FRENET_ORDER, natural_tol, kappa_tol)
    return FrenetSample(
        s=s,
        t=_vec(fj.t),
        n=_vec(fj.n),
        b=_vec(fj.b),
        kappa=MulScalar(fj.kappa.value),
        tau=MulScalar(fj.tau.value),
    )


def frenet_residuals(
    c: LogChartCurve,
    s: MulScalar,
    kappa_offset: MulScalar | None = None,
) -> tuple[MulScalar, MulScalar, MulScalar]:
    """Norms of ``t* -* k.*n``, ``n* +* k.*t -* tau.*b`` and ``b* +* tau.*n``.

    Each is ``0*`` for exact Frenet formulae.  ``kappa_offset`` perturbs the
    curvature to ``kappa +* offset`` (a sanity check of the residuals).
    """
    fj = frame_jets(c, s.logval, FRENET_ORDER + 1)
    k = fj.kappa.value
    if kappa_offset is not None:
        k += kappa_offset.logval
    tau = fj.tau.value

    def vals(v):
        return np.array(_values(v))

    dt, dn, db = vals(_d(fj.t)), vals(_d(fj.n)), vals(_d(fj.b))
    t, n, b = vals(fj.t), vals(fj.n), vals(fj.b)
    r_t = dt - k * n
    r_n = dn + k * t - tau * b
    r_b = db + tau * n
    return tuple(MulScalar(float(np.linalg.norm(r))) for r in (r_t, r_n, r_b))  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# spheres
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MulSphere:
    center: MulVec3
    radius: MulScalar

    def __post_init__(self):
        if self.radius.logval <= 0.0:
            raise PreconditionError("a multiplicative sphere needs radius > 0*")


UNIT_SPHERE = MulSphere(MulVec3.from_logs((0.0, 0.0, 0.0)), MulScalar(1.0))


def on_sphere(p: MulVec3, sph: MulSphere = UNIT_SPHERE, tol: float = 1e-9) -> bool:
    """Whether ``|p -* C|* = r`` within ``tol`` on log-images."""
    return abs(mnorm(vsub(p, sph.center)).logval - sph.radius.logval) <= tol
