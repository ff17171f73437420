"""Multiplicative calculus: expression language, derivatives, integrals."""

from .calculus import MAX_DERIV_ORDER, mderiv, mderiv_numeric, mintegral
from .expr import CurveExpr, evaluate, evaluate_log_jet, parse, to_text
from .quadrature import adaptive_simpson

__all__ = [
    "CurveExpr",
    "parse",
    "to_text",
    "evaluate",
    "evaluate_log_jet",
    "mderiv",
    "mderiv_numeric",
    "mintegral",
    "adaptive_simpson",
    "MAX_DERIV_ORDER",
]
