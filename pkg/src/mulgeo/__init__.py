"""Multiplicative differential geometry of space curves.

Every object lives in the multiplicative space R*, the positive reals with
``a +* b = ab`` and ``a .* b = a^{log b}``.  Values are stored by their
log-image, so the whole library runs classical calculus in the log chart
``u = log s, y = log x`` and maps results back.
"""

from .curve import (
    IntrinsicCurve,
    LogChartCurve,
    MulCurve,
    MulSphere,
    NaturalCurve,
    UNIT_SPHERE,
    arclength,
    frenet,
    frenet_residuals,
    is_natural,
    log_grid,
    on_sphere,
    reparam_natural,
    speed,
    velocity,
)
from .errors import (
    ClassificationError,
    DomainError,
    EvalError,
    MulGeoError,
    ParseError,
    PreconditionError,
    UndefinedFrameError,
)
from .helix import HelixReport, classify, gamma_clad, psi_gclad, ratio_f, sigma_slant
from .indicatrix import (
    IndicatrixKind,
    adjudicate,
    arc_param,
    indicatrix_closed,
    indicatrix_direct,
    indicatrix_points,
)
from .mulcalc import evaluate, mderiv, mintegral, parse
from .mularith import ONE, ZERO, MulScalar, format_logval
from .mulvec import MulVec3, mangle, mcross, minner, mnorm
from .oracle import compare
from .presets import PRESETS, get_preset, load_curve

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
