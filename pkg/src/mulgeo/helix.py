"""Helix invariants and the general/slant/clad/g-clad classification.

Along a natural curve with curvature kappa and torsion tau (log chart):

* ``f = tau /* kappa``                      constant  <=> general helix
* ``sigma = f* /* (kappa .* (e +* f^2*)^{3/2*})``   constant  <=> slant helix
* ``Gamma = sigma* /* (kappa .* (e +* f^2*)^{1/2*} .* (e +* sigma^2*)^{3/2*})``
  (the torsion/curvature ratio of the normal indicatrix)  constant <=> clad helix
* ``psi = Gamma* /* ((kappa^2* +* tau^2*)^{1/2*} .* (e +* sigma^2*)^{1/2*}
  .* (e +* Gamma^2*)^{3/2*})``  constant <=> g-clad helix

Each invariant is computed as a jet, so the next one in the chain takes an
exact derivative of the previous.  ``psi`` needs position jets of order 6.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .curve import FrameJets, LogChartCurve, base_param, natural_frame
from .errors import ClassificationError, MulGeoError, PreconditionError
from .jet import Jet
from .mularith import MulScalar

__all__ = [
    "HelixJets",
    "HelixReport",
    "helix_jets",
    "ratio_f",
    "sigma_slant",
    "sigma_from_f",
    "gamma_clad",
    "psi_gclad",
    "classify",
    "VERDICTS",
    "PROFILE_ORDER",
    "GAMMA_FORMS",
]

PROFILE_ORDER = 6
DEFAULT_TOL = 1e-6
REPARAM_TOL = 1e-4
MAX_EXCLUDED_FRACTION = 0.10

# "printed" keeps the (e +* f^2*) factor to the first power, as displayed with
# the clad-helix characterization; "amended" uses the square root, which is the
# power that makes Gamma equal tau_n /* kappa_n.
GAMMA_FORMS = ("amended", "printed")

VERDICTS = ("general", "slant-not-general", "clad-not-slant", "gclad-not-clad", "none")


@dataclass(frozen=True)
class HelixJets:
    kappa: Jet
    tau: Jet
    f: Jet
    sigma: Jet
    gamma: Jet
    psi: Jet | None


def _gamma(frame: FrameJets, f: Jet, sigma: Jet, form: str) -> Jet:
    one_f2 = 1.0 + f * f
    one_s2 = 1.0 + sigma * sigma
    if form == "amended":
        denom = frame.kappa * one_f2**0.5 * one_s2**1.5
    elif form == "printed":
        denom = frame.kappa * one_f2 * one_s2**1.5
    else:
        raise PreconditionError(f"unknown Gamma form {form!r}; expected one of {GAMMA_FORMS}")
    return sigma.derivative() / denom


def helix_jets(frame: FrameJets, gamma_form: str = "amended") -> HelixJets:
    """All four invariants as jets from a frame computed at ``PROFILE_ORDER``.

    ``psi`` is None when the frame jets are too short to differentiate Gamma.
    """
    kappa, tau = frame.kappa, frame.tau
    f = tau / kappa
    sigma = sigma_from_f(kappa, f)
    gamma = _gamma(frame, f, sigma, gamma_form)
    psi = None
    if gamma.order >= 1:
        psi = gamma.derivative() / (
            (kappa * kappa + tau * tau) ** 0.5 * (1.0 + sigma * sigma) ** 0.5 * (1.0 + gamma * gamma) ** 1.5
        )
    return HelixJets(kappa, tau, f, sigma, gamma, psi)


def sigma_from_f(kappa: Jet, f: Jet) -> Jet:
    """``sigma = f* /* (kappa .* (e +* f^2*)^{3/2*})``."""
    return f.derivative() / (kappa * (1.0 + f * f) ** 1.5)


def sigma_n3(kappa: Jet, tau: Jet) -> Jet:
    """Slant-helix function in the kappa/tau form.

    ``[kappa^2* /* (kappa^2* +* tau^2*)^{3/2*}] .* (tau /* kappa)*``.
    """
    k2 = kappa * kappa
    return k2 / (k2 + tau * tau) ** 1.5 * (tau / kappa).derivative()


def _frame(c: LogChartCurve, s: MulScalar, order: int) -> FrameJets:
    return natural_frame(c, base_param(c, s), order, with_h=False)[1]


def ratio_f(c: LogChartCurve, s: MulScalar) -> MulScalar:
    """``f = tau /* kappa``."""
    fr = _frame(c, s, 3)
    return MulScalar(fr.tau.value / fr.kappa.value)


def sigma_slant(c: LogChartCurve, s: MulScalar) -> MulScalar:
    """Slant-helix function sigma in the kappa/tau form."""
    fr = _frame(c, s, 4)
    return MulScalar(sigma_n3(fr.kappa, fr.tau).value)


def gamma_clad(c: LogChartCurve, s: MulScalar, form: str = "amended") -> MulScalar:
    """Clad-helix function Gamma (``form`` selects the amended or printed power)."""
    fr = _frame(c, s, 5)
    f = fr.tau / fr.kappa
    return MulScalar(_gamma(fr, f, sigma_from_f(fr.kappa, f), form).value)


def psi_gclad(c: LogChartCurve, s: MulScalar, gamma_form: str = "amended") -> MulScalar:
    """g-clad-helix function psi."""
    hj = helix_jets(_frame(c, s, PROFILE_ORDER), gamma_form)
    assert hj.psi is not None
    return MulScalar(hj.psi.value)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def _max_dev(values: Sequence[float]) -> float:
    if not values:
        return math.nan
    mean = math.fsum(values) / len(values)
    return max(abs(v - mean) for v in values)


@dataclass
class HelixReport:
    """Sampled invariant profiles (log-images) and the constancy verdict."""

    curve: str
    grid: list[float]
    f: list[float]
    sigma: list[float]
    gamma: list[float]
    psi: list[float]
    max_dev: dict[str, float]
    verdict: str
    memberships: dict[str, bool]
    tol: float
    gamma_form: str = "amended"
    excluded: list[dict] = field(default_factory=list)

    def constant(self, quantity: str) -> bool:
        return self.max_dev[quantity] <= self.tol

    def mean(self, quantity: str) -> float:
        vals = getattr(self, quantity)
        return math.fsum(vals) / len(vals)

    def to_dict(self) -> dict:
        return {
            "curve": self.curve,
            "grid": self.grid,
            "profiles": {"f": self.f, "sigma": self.sigma, "gamma": self.gamma, "psi": self.psi},
            "max_dev": self.max_dev,
            "verdict": self.verdict,
            "memberships": self.memberships,
            "tol": self.tol,
            "gamma_form": self.gamma_form,
            "excluded": self.excluded,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @property
    def deciding(self) -> str:
        """Name of the quantity whose constancy decided the verdict."""
        return _DECIDING[self.verdict]

    def summary(self) -> str:
        """``verdict=... max_dev=... n=...``; max_dev is that of the deciding quantity."""
        dev = self.max_dev[self.deciding]
        return f"verdict={self.verdict} max_dev={dev:.3e} n={len(self.grid)}"


# Quantity whose constancy decides each verdict; "none" reports the last one tried.
_DECIDING = {
    "general": "f",
    "slant-not-general": "sigma",
    "clad-not-slant": "gamma",
    "gclad-not-clad": "psi",
    "none": "psi",
}


def _verdict(const: dict[str, bool]) -> str:
    if const["f"]:
        return "general"
    if const["sigma"]:
        return "slant-not-general"
    if const["gamma"]:
        return "clad-not-slant"
    if const["psi"]:
        return "gclad-not-clad"
    return "none"


def profile_frames(c: LogChartCurve, grid: Iterable[MulScalar], order: int = PROFILE_ORDER):
    """Yield ``(s, FrameJets | exception)`` over ``grid``."""
    for s in grid:
        try:
            yield s, _frame(c, s, order)
        except MulGeoError as exc:
            yield s, exc


def classify(
    c: LogChartCurve,
    grid: Sequence[MulScalar],
    tol: float = DEFAULT_TOL,
    gamma_form: str = "amended",
) -> HelixReport:
    """Sample f, sigma, Gamma, psi over ``grid`` and classify the curve.

    A quantity tests constant iff ``max |logval - mean logval| <= tol``.  The
    verdict is the innermost family whose defining quantity is constant.
    Samples that fail upstream are excluded and listed in the report.

    Raises:
        ClassificationError: if more than 10% of the grid had to be excluded.
    """
    grid = list(grid)
    kept: list[float] = []
    prof: dict[str, list[float]] = {"f": [], "sigma": [], "gamma": [], "psi": []}
    excluded = []
    for s, fr in profile_frames(c, grid):
        try:
            if isinstance(fr, Exception):
                raise fr
            hj = helix_jets(fr, gamma_form)
            row = {"f": hj.f.value, "sigma": hj.sigma.value, "gamma": hj.gamma.value, "psi": hj.psi.value}
        except MulGeoError as exc:
            excluded.append({"s": s.logval, "error": f"{type(exc).__name__}: {exc}"})
            continue
        kept.append(s.logval)
        for k, v in row.items():
            prof[k].append(v)
    if len(excluded) > MAX_EXCLUDED_FRACTION * len(grid):
        raise ClassificationError(
            f"{len(excluded)} of {len(grid)} samples failed for {c.name}: {excluded[0]['error']}"
        )
    max_dev = {k: _max_dev(v) for k, v in prof.items()}
    const = {k: v <= tol for k, v in max_dev.items()}
    memberships = {
        "general": const["f"],
        "slant": const["sigma"],
        "clad": const["gamma"],
        "gclad": const["psi"],
    }
    return HelixReport(
        curve=c.name,
        grid=kept,
        f=prof["f"],
        sigma=prof["sigma"],
        gamma=prof["gamma"],
        psi=prof["psi"],
        max_dev=max_dev,
        verdict=_verdict(const),
        memberships=memberships,
        tol=tol,
        gamma_form=gamma_form,
        excluded=excluded,
    )
