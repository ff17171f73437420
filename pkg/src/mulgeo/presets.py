"""Named example curves.

Where a printed example is ambiguous it ships twice: ``-literal`` follows the
text as written, ``-corrected`` follows the reading that makes the example do
what it claims.  ``note`` records the difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curve import IntrinsicCurve, LogChartCurve, MulCurve, NaturalCurve, reparam_natural
from .errors import PreconditionError

__all__ = ["Preset", "PRESETS", "get_preset", "preset_names", "load_curve", "is_reparametrized"]


@dataclass(frozen=True)
class Preset:
    name: str
    components: tuple[str, str, str] | None
    lo: float
    hi: float
    natural: bool
    note: str = ""
    reading: str = "literal"
    intrinsic: tuple[str, str] | None = None

    def build(self) -> MulCurve | IntrinsicCurve:
        if self.intrinsic is not None:
            return IntrinsicCurve(*self.intrinsic, self.lo, self.hi, name=self.name)
        return MulCurve.from_strings(*self.components, self.lo, self.hi, name=self.name)

    def curve(self) -> LogChartCurve:
        """The curve ready for Frenet work: reparametrized unless already natural."""
        c = self.build()
        return c if self.natural else reparam_natural(c)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "components": list(self.components) if self.components else None,
            "intrinsic": list(self.intrinsic) if self.intrinsic else None,
            "domain": [self.lo, self.hi],
            "natural": self.natural,
            "reading": self.reading,
            "note": self.note,
        }


_SLANT_A = "e^9 /* e^400"
_SLANT_B = "e^25 /* e^144"
_CLAD_X1 = "e^18 .* mcos(e^3 .* s) .* mcos(e^6 .* mcos(e^3 .* s))"
_CLAD_X2 = "e^{%s} .* mcos(e^3 .* s) .* msin(e^6 .* mcos(e^3 .* s))"
_CLAD_X3 = "msin(e^2 .* s)"
_CLAD_THETA = "(e^2 -* (e^1 -* e^0.25 .* s ^* 2) ^* 0.5 /* e^0.5)"

_LIST = [
    Preset(
        "helix35",
        ("e^3 /* e^5 .* mcos(s)", "e^3 /* e^5 .* msin(s)", "e^4 /* e^5 .* s"),
        1.0,
        math.exp(2 * math.pi),
        natural=True,
        note="circular multiplicative helix; kappa = e^{3/5}, tau = e^{4/5}",
    ),
    Preset(
        "example411-literal",
        ("s", "e^{%r}" % (math.e**2 / 2), "e^{%r}" % (math.e**3 / 6)),
        math.exp(0.1),
        math.exp(2.0),
        natural=True,
        note="second and third components are constants as printed: a straight line, no Frenet frame",
    ),
    Preset(
        "example411-corrected",
        ("s", "e^0.5 .* s ^* 2", "e^1 /* e^6 .* s ^* 3"),
        math.exp(0.1),
        math.exp(2.0),
        natural=False,
        reading="corrected",
        note="(e^s, e^{s^2/2}, e^{s^3/6}) read in the log chart; not natural, reparametrized",
    ),
    Preset(
        "slant-literal",
        (
            f"{_SLANT_A} .* msin(25 +* s) +* {_SLANT_B} .* msin(9 +* s)",
            f"-* {_SLANT_A} .* mcos(25 +* s) +* {_SLANT_B} .* mcos(9 +* s)",
            "e^15 /* e^136 .* msin(17 +* s)",
        ),
        math.exp(0.05),
        math.exp(1.2),
        natural=False,
        note="sin(log 25s) = sin(log 25 + u): every frequency is 1 and the curve is a general helix",
    ),
    Preset(
        "slant-corrected",
        (
            f"{_SLANT_A} .* msin(e^25 .* s) -* {_SLANT_B} .* msin(e^9 .* s)",
            f"-* {_SLANT_A} .* mcos(e^25 .* s) +* {_SLANT_B} .* mcos(e^9 .* s)",
            "e^15 /* e^64 .* msin(e^8 .* s)",
        ),
        math.exp(0.03),
        math.exp(0.36),
        natural=False,
        reading="corrected",
        note=(
            "frequencies read as sin(25 log s); the third component needs frequency (25-9)/2 = 8 "
            "with amplitude 15/64 and x1 needs a minus sign for a slant helix (speed 17/8, |sigma| = 8/15); "
            "domain kept between consecutive zeros of kappa at u = k pi/8"
        ),
    ),
    Preset(
        "slant-printed-frequencies",
        (
            f"{_SLANT_A} .* msin(e^25 .* s) +* {_SLANT_B} .* msin(e^9 .* s)",
            f"-* {_SLANT_A} .* mcos(e^25 .* s) +* {_SLANT_B} .* mcos(e^9 .* s)",
            "e^15 /* e^136 .* msin(e^17 .* s)",
        ),
        math.exp(0.05),
        math.exp(1.2),
        natural=False,
        reading="corrected",
        note="only sin(log 25s) -> sin(25 log s) changed; sigma is not constant",
    ),
    Preset(
        "clad-literal",
        (_CLAD_X1, _CLAD_X2 % "-18", _CLAD_X3),
        math.exp(0.05),
        math.exp(0.5),
        natural=False,
        note="x2 coefficient e^{-18} as printed",
    ),
    Preset(
        "clad-corrected",
        (_CLAD_X1, _CLAD_X2 % "18", _CLAD_X3),
        math.exp(0.05),
        math.exp(0.5),
        natural=False,
        reading="corrected",
        note="x2 coefficient e^{18}; a mirror image of the literal reading, so every verdict agrees",
    ),
    Preset(
        "fig1-circle",
        ("e^-2 .* e^0.5 .* mcos(2 +* s)", "e^-2 .* e^0.5 .* msin(2 +* s)", "e^-2 .* e^{%r}" % math.sqrt(3)),
        1.0,
        math.exp(2 * math.pi),
        natural=True,
        note=(
            "literal reading, cos_*2s = e^{cos(log 2 + log s)}: one turn of a circle of radius 1* "
            "in the plane log z = -2 sqrt 3, against the caption's radius 1/e^2 and plane e^{sqrt 3/2}"
        ),
    ),
    Preset(
        "intrinsic-slant",
        None,
        math.exp(0.1),
        math.exp(2.0),
        natural=True,
        reading="constructed",
        intrinsic=("mcos(e^0.5 .* s)", "msin(e^0.5 .* s)"),
        note="kappa = cos theta, tau = sin theta with theta = u/2: sigma = e^{1/2}",
    ),
    Preset(
        "intrinsic-clad",
        None,
        math.exp(0.1),
        math.exp(1.5),
        natural=True,
        reading="constructed",
        intrinsic=("mcos" + _CLAD_THETA, "msin" + _CLAD_THETA),
        note="kappa = cos theta, tau = sin theta with theta = 2 - 2 sqrt(1 - u^2/4): Gamma = e^{1/2}",
    ),
    Preset(
        "helix-perturbed",
        None,
        1.0,
        math.exp(6.0),
        natural=True,
        reading="constructed",
        intrinsic=("e^0.6", "e^0.8 +* e^0.1 .* msin(s)"),
        note="helix35 curvatures with tau multiplied by e^{0.1 sin log s}",
    ),
]

PRESETS: dict[str, Preset] = {p.name: p for p in _LIST}


def preset_names() -> list[str]:
    return list(PRESETS)


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise PreconditionError(f"unknown preset {name!r}; known: {', '.join(PRESETS)}") from None


def load_curve(name: str) -> LogChartCurve:
    """Preset curve, reparametrized by arc length when it is not natural."""
    return get_preset(name).curve()


def is_reparametrized(c: LogChartCurve) -> bool:
    return isinstance(c, NaturalCurve)
