"""Multiplicative derivatives and integrals.

Everything happens in the log chart ``u = log s``, ``g(u) = log f(e^u)``:

* the k-th multiplicative derivative of f has log-image ``g^(k)(u)``; for
  k = 1 this is the closed form ``e^{x f'(x) / f(x)}``;
* the multiplicative integral ``e^{int (1/x) log f(x) dx}`` has log-image
  ``int g(u) du`` because ``dx / x = du``.
"""

from __future__ import annotations

import math
import sys
from typing import Callable, Union

from ..errors import EvalError, PreconditionError, UnsupportedError
from ..mularith import MulScalar
from .expr import CurveExpr, evaluate, evaluate_log_jet, parse
from .quadrature import DEFAULT_MAX_DEPTH, DEFAULT_TOL, adaptive_simpson

__all__ = ["mderiv", "mderiv_numeric", "mintegral", "MAX_DERIV_ORDER"]

MAX_DERIV_ORDER = 4

ExprLike = Union[CurveExpr, str]
ScalarFn = Callable[[MulScalar], MulScalar]


def _as_expr(expr: ExprLike) -> CurveExpr:
    return parse(expr) if isinstance(expr, str) else expr


def mderiv(expr: ExprLike, s: MulScalar, order: int = 1) -> MulScalar:
    """Exact k-th multiplicative derivative of ``expr`` at ``s`` (k = 1..4).

    Raises:
        UnsupportedError: for orders outside 1..4.
        EvalError: on a pole or domain failure inside the expression.
    """
    if not 1 <= order <= MAX_DERIV_ORDER:
        raise UnsupportedError(f"derivative order must be in 1..{MAX_DERIV_ORDER}, got {order}")
    jet = evaluate_log_jet(_as_expr(expr).ast, s.logval, order)
    return MulScalar(jet.deriv(order))


# Central stencils of order h^2: (offsets, weights, power of h).
_STENCILS = {
    1: ((-1, 1), (-0.5, 0.5)),
    2: ((-1, 0, 1), (1.0, -2.0, 1.0)),
    3: ((-2, -1, 1, 2), (-0.5, 1.0, -1.0, 0.5)),
    4: ((-2, -1, 0, 1, 2), (1.0, -4.0, 6.0, -4.0, 1.0)),
}


def mderiv_numeric(fn: Union[ScalarFn, ExprLike], s: MulScalar, order: int = 1) -> MulScalar:
    """Finite-difference multiplicative derivative, used as an independent check.

    Central differences of order h^2 are applied to ``g(u) = log fn(e^u)``.
    The step is ``eps^(1/(order+2)) * max(1, |u|)``, i.e. ``cbrt(eps)`` scaling
    for the first derivative.
    """
    if not 1 <= order <= MAX_DERIV_ORDER:
        raise UnsupportedError(f"derivative order must be in 1..{MAX_DERIV_ORDER}, got {order}")
    if isinstance(fn, (CurveExpr, str)):
        node = _as_expr(fn).ast

        def fn(x: MulScalar) -> MulScalar:
            return evaluate(node, x)

    u = s.logval
    h = sys.float_info.epsilon ** (1.0 / (order + 2)) * max(1.0, abs(u))
    offsets, weights = _STENCILS[order]
    try:
        acc = math.fsum(w * fn(MulScalar(u + k * h)).logval for k, w in zip(offsets, weights))
    except EvalError as exc:
        raise EvalError(f"evaluation failed inside the difference stencil: {exc}") from exc
    return MulScalar(acc / h**order)


def mintegral(
    expr: Union[ExprLike, ScalarFn],
    a: MulScalar,
    b: MulScalar,
    tol: float = DEFAULT_TOL,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> MulScalar:
    """Definite multiplicative integral of ``expr`` from ``a`` to ``b``.

    Computed as ``e^{int_{log a}^{log b} g(u) du}`` by adaptive Simpson.

    Raises:
        PreconditionError: if ``a > b``.
        QuadratureError: if refinement does not converge.
    """
    if a.logval > b.logval:
        raise PreconditionError(f"mintegral needs a <= b, got {a} > {b}")
    if isinstance(expr, (CurveExpr, str)):
        node = _as_expr(expr).ast

        def g(u: float) -> float:
            return evaluate(node, MulScalar(u)).logval

    else:
        fn = expr

        def g(u: float) -> float:
            return fn(MulScalar(u)).logval

    value, _ = adaptive_simpson(g, a.logval, b.logval, tol, max_depth)
    return MulScalar(value)
