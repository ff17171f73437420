"""Tangent, normal and binormal spherical indicatrices.

Two independent routes are provided for each kind:

* closed forms, expressed through the frame ``t, n, b`` of the curve and the
  auxiliary functions ``f = tau /* kappa``, ``lambda = (e +* f^2*)^{1/2*}``,
  ``sigma`` and ``Gamma`` (see :mod:`mulgeo.helix`);
* the direct route, which treats the indicatrix as a curve in its own right,
  reparametrizes it by arc length and runs the ordinary Frenet machinery.

The normal-indicatrix formulas exist in two variants.  ``amended`` (default)
uses ``kappa_n = (e +* sigma^2*)^{1/2*}``, ``tau_n = Gamma .* kappa_n`` and
``B_n = (B_t +* sigma .* n) /* kappa_n``; ``printed`` keeps the displayed
exponents and sign.  Only the amended variant agrees with the direct route.
The binormal closed forms assume ``tau > 0*``; its torsion likewise has an
``amended`` form ``-* sigma .* lambda /* f`` and a ``printed`` one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .curve import (
    FRENET_ORDER,
    FrameJets,
    LogChartCurve,
    NaturalCurve,
    base_param,
    frame_from_jets,
    natural_frame,
)
from .errors import MulZeroDivisionError, PreconditionError
from .helix import helix_jets
from .jet import Jet
from .jetvec import JetVec, to_vec, values
from .mulcalc.quadrature import adaptive_simpson
from .mularith import MulScalar
from .mulvec import MulVec3, minner

__all__ = [
    "IndicatrixKind",
    "IndicatrixApparatus",
    "IndicatrixCurve",
    "indicatrix_curve",
    "indicatrix_points",
    "arc_param",
    "indicatrix_frame_closed",
    "indicatrix_curvatures_closed",
    "indicatrix_closed",
    "indicatrix_direct",
    "adjudicate",
    "VARIANTS",
]

VARIANTS = ("amended", "printed")
# Order of the frame needed by the closed forms: Gamma differentiates sigma,
# which differentiates f.
_CLOSED_ORDER = 5
_F_ZERO_TOL = 1e-12


class IndicatrixKind(str, enum.Enum):
    TANGENT = "tangent"
    NORMAL = "normal"
    BINORMAL = "binormal"

    @classmethod
    def parse(cls, value: "IndicatrixKind | str") -> "IndicatrixKind":
        try:
            return cls(value)
        except ValueError:
            raise PreconditionError(
                f"unknown indicatrix kind {value!r}; expected tangent, normal or binormal"
            ) from None


@dataclass(frozen=True)
class IndicatrixApparatus:
    """Frame and curvatures of an indicatrix at the point with parameter ``s``."""

    s: MulScalar
    arc_param: MulScalar
    T: MulVec3
    N: MulVec3
    B: MulVec3
    kappa_ind: MulScalar
    tau_ind: MulScalar
    f: MulScalar | None = None
    sigma: MulScalar | None = None

    @property
    def frame(self) -> tuple[MulVec3, MulVec3, MulVec3]:
        return (self.T, self.N, self.B)

    def as_record(self) -> dict:
        rec = {
            "s": self.s.logval,
            "arc_param": self.arc_param.logval,
            "T": list(self.T.logvec),
            "N": list(self.N.logvec),
            "B": list(self.B.logvec),
            "kappa": self.kappa_ind.logval,
            "tau": self.tau_ind.logval,
        }
        if self.f is not None:
            rec["f"] = self.f.logval
        if self.sigma is not None:
            rec["sigma"] = self.sigma.logval
        return rec


def _pick(fr: FrameJets, kind: IndicatrixKind) -> JetVec:
    return {IndicatrixKind.TANGENT: fr.t, IndicatrixKind.NORMAL: fr.n, IndicatrixKind.BINORMAL: fr.b}[kind]


class IndicatrixCurve(LogChartCurve):
    """The indicatrix ``t``, ``n`` or ``b`` of a natural curve, as a curve.

    It shares the parameter of ``base`` (for a :class:`NaturalCurve` that is
    the underlying base parameter, which avoids inverting arc length while
    integrating).  ``u_domain`` may restrict the base domain.
    """

    def __init__(self, base: LogChartCurve, kind, u_domain: tuple[float, float] | None = None):
        self.base = base
        self.kind = IndicatrixKind.parse(kind)
        self.name = f"{base.name}-{self.kind.value}-indicatrix"
        if u_domain is None:
            u_domain = base.base.u_domain if isinstance(base, NaturalCurve) else base.u_domain
        self.u_domain = u_domain

    def log_jets(self, u: float, order: int) -> JetVec:
        _, fr, dh = natural_frame(self.base, u, max(order + 2, FRENET_ORDER), with_h=False)
        v = _pick(fr, self.kind)
        if isinstance(self.base, NaturalCurve):
            v = tuple(x.compose(dh) for x in v)
        return tuple(x.truncate(order) for x in v)  # type: ignore[return-value]


def indicatrix_curve(c: LogChartCurve, kind) -> IndicatrixCurve:
    return IndicatrixCurve(c, kind)


def indicatrix_points(c: LogChartCurve, kind, grid: Sequence[MulScalar]) -> list[MulVec3]:
    """Points ``t(s)``, ``n(s)`` or ``b(s)`` over ``grid``; all lie on the unit sphere."""
    kind = IndicatrixKind.parse(kind)
    return [to_vec(_pick(natural_frame(c, base_param(c, s), FRENET_ORDER)[1], kind)) for s in grid]


# ---------------------------------------------------------------------------
# arc parameters
# ---------------------------------------------------------------------------


def _arc_density(c: LogChartCurve, kind: IndicatrixKind, u: float) -> float:
    """Log-density of the indicatrix arc parameter with respect to base ``u``."""
    _, fr, dh = natural_frame(c, u, FRENET_ORDER, with_h=False)
    k, t = fr.kappa.value, fr.tau.value
    if kind is IndicatrixKind.TANGENT:
        rho = k
    elif kind is IndicatrixKind.NORMAL:
        # kappa .* lambda with lambda = (1 + f^2)^{1/2}
        rho = k * math.sqrt(1.0 + (t / k) ** 2)
    else:
        rho = abs(t)
    return rho * dh.deriv(1)


def arc_param(c: LogChartCurve, kind, s0: MulScalar, s: MulScalar, tol: float = 1e-12) -> MulScalar:
    """Arc parameter of the indicatrix, measured from ``s0``.

    ``s_t = int* kappa d*s``, ``s_n = int* kappa .* lambda d*s`` and
    ``s_b = int* |tau| d*s``, each computed as a log-chart integral.  Values
    for ``s < s0`` are negative in logval.
    """
    kind = IndicatrixKind.parse(kind)
    a, b = base_param(c, s0), base_param(c, s)
    value, _ = adaptive_simpson(lambda u: _arc_density(c, kind, u), a, b, tol)
    return MulScalar(value)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def _closed_values(c: LogChartCurve, s: MulScalar, kind: IndicatrixKind, variant: str):
    if variant not in VARIANTS:
        raise PreconditionError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    _, fr, _ = natural_frame(c, base_param(c, s), _CLOSED_ORDER, with_h=False)
    hj = helix_jets(fr, "amended" if variant == "amended" else "printed")
    t, n, b = (values(v) for v in (fr.t, fr.n, fr.b))
    f, sigma, gamma = hj.f.value, hj.sigma.value, hj.gamma.value
    lam = math.sqrt(1.0 + f * f)
    mu = math.sqrt(1.0 + sigma * sigma)

    def comb(*terms):
        return tuple(math.fsum(k * v[i] for k, v in terms) for i in range(3))

    Bt = comb((f / lam, t), (1.0 / lam, b))
    if kind is IndicatrixKind.TANGENT:
        T, N, B = n, comb((-1.0 / lam, t), (f / lam, b)), Bt
        kappa, tau = lam, sigma * lam
    elif kind is IndicatrixKind.NORMAL:
        T = comb((-1.0 / lam, t), (f / lam, b))
        N = comb((sigma / mu, Bt), (-1.0 / mu, n))
        if variant == "amended":
            B = comb((1.0 / mu, Bt), (sigma / mu, n))
            kappa, tau = mu, gamma * mu
        else:
            B = comb((1.0 / mu, Bt), (-sigma / mu, n))
            kappa, tau = 1.0 + sigma * sigma, gamma * (1.0 + f * f)
    else:
        if abs(f) <= _F_ZERO_TOL:
            raise MulZeroDivisionError(f"f = 0* at s={s}; the binormal indicatrix forms divide by f")
        T = tuple(-x for x in n)
        N = comb((1.0 / lam, t), (-f / lam, b))
        B = Bt
        kappa = lam / f
        tau = -sigma * lam / f if variant == "amended" else -sigma * mu / f
    return (MulVec3.from_logs(T), MulVec3.from_logs(N), MulVec3.from_logs(B)), kappa, tau, f, sigma


def indicatrix_frame_closed(
    c: LogChartCurve, kind, s: MulScalar, variant: str = "amended"
) -> tuple[MulVec3, MulVec3, MulVec3]:
    """Closed-form Frenet vectors ``(T, N, B)`` of the indicatrix at ``s``."""
    frame, *_ = _closed_values(c, s, IndicatrixKind.parse(kind), variant)
    return frame


def indicatrix_curvatures_closed(
    c: LogChartCurve, kind, s: MulScalar, variant: str = "amended"
) -> tuple[MulScalar, MulScalar]:
    """Closed-form ``(kappa, tau)`` of the indicatrix at ``s``.

    Tangent: ``kappa_t = lambda``, ``tau_t = sigma .* lambda``.
    Normal: ``kappa_n = (e +* sigma^2*)^{1/2*}``, ``tau_n = Gamma .* kappa_n``.
    Binormal: ``kappa_b = lambda /* f``, ``tau_b = -* sigma .* lambda /* f``.

    Raises:
        MulZeroDivisionError: for the binormal kind where ``f = 0*``.
    """
    _, kappa, tau, _, _ = _closed_values(c, s, IndicatrixKind.parse(kind), variant)
    return MulScalar(kappa), MulScalar(tau)


def indicatrix_closed(
    c: LogChartCurve, kind, grid: Sequence[MulScalar], variant: str = "amended"
) -> list[IndicatrixApparatus]:
    """Closed-form apparatus over ``grid``; arc parameters are measured from ``grid[0]``."""
    kind = IndicatrixKind.parse(kind)
    grid = list(grid)
    out = []
    acc = 0.0
    for i, s in enumerate(grid):
        if i:
            acc += arc_param(c, kind, grid[i - 1], s).logval
        (T, N, B), kappa, tau, f, sigma = _closed_values(c, s, kind, variant)
        out.append(
            IndicatrixApparatus(s, MulScalar(acc), T, N, B, MulScalar(kappa), MulScalar(tau), MulScalar(f), MulScalar(sigma))
        )
    return out


# ---------------------------------------------------------------------------
# direct route
# ---------------------------------------------------------------------------


def indicatrix_direct(c: LogChartCurve, kind, grid: Sequence[MulScalar], grid_size: int = 128) -> list[IndicatrixApparatus]:
    """Apparatus of the indicatrix computed as a curve of its own.

    The indicatrix over the span of ``grid`` is reparametrized by arc length
    and passed through :func:`mulgeo.curve.frame_from_jets`.  No closed form
    is used.

    Raises:
        ReparametrizationError: if the indicatrix is singular on the span.
        UndefinedFrameError: where its curvature vanishes.
    """
    kind = IndicatrixKind.parse(kind)
    us = [base_param(c, s) for s in grid]
    ind = IndicatrixCurve(c, kind, (min(us), max(us)))
    nat = NaturalCurve(ind, grid_size)
    lo = nat.u_domain[0]
    out = []
    for s, u in zip(grid, us):
        h, y = nat.jets_at_base(u, FRENET_ORDER)
        fr = frame_from_jets(y, h, name=ind.name)
        out.append(
            IndicatrixApparatus(
                s,
                MulScalar(h - lo),
                to_vec(fr.t),
                to_vec(fr.n),
                to_vec(fr.b),
                MulScalar(fr.kappa.value),
                MulScalar(fr.tau.value),
            )
        )
    return out


# ---------------------------------------------------------------------------
# adjudication
# ---------------------------------------------------------------------------


def _vdist(a: MulVec3, b: MulVec3) -> float:
    return math.dist(a.logvec, b.logvec)


def adjudicate(c: LogChartCurve, grid: Sequence[MulScalar], kinds=tuple(IndicatrixKind)) -> dict:
    """Compare both closed-form variants against the direct route.

    Returns a nested dict ``{kind: {variant: {quantity: max deviation}}}``
    over ``T, N, B, kappa, tau, arc_param``, plus the largest deviation of the
    closed frame from orthonormality under key ``"orthonormality"``.  Each kind
    also carries ``"applicable"``: False for the binormal kind when ``tau``
    is not positive on the whole grid, where its closed forms do not hold.
    """
    report: dict = {}
    for kind in kinds:
        kind = IndicatrixKind.parse(kind)
        direct = indicatrix_direct(c, kind, grid)
        report[kind.value] = {}
        for variant in VARIANTS:
            closed = indicatrix_closed(c, kind, grid, variant)
            dev = {q: 0.0 for q in ("T", "N", "B", "kappa", "tau", "arc_param", "orthonormality")}
            for a, d in zip(closed, direct):
                for q in ("T", "N", "B"):
                    dev[q] = max(dev[q], _vdist(getattr(a, q), getattr(d, q)))
                for q, x, y in (
                    ("kappa", a.kappa_ind, d.kappa_ind),
                    ("tau", a.tau_ind, d.tau_ind),
                    ("arc_param", a.arc_param, d.arc_param),
                ):
                    dev[q] = max(dev[q], abs(x.logval - y.logval))
                fr = a.frame
                for i in range(3):
                    for j in range(3):
                        want = 1.0 if i == j else 0.0
                        dev["orthonormality"] = max(dev["orthonormality"], abs(minner(fr[i], fr[j]).logval - want))
            report[kind.value][variant] = dev
        report[kind.value]["applicable"] = kind is not IndicatrixKind.BINORMAL or all(
            a.f.logval > 0.0 for a in closed
        )
    return report
