"""Adaptive Simpson quadrature with a Richardson error estimate."""

from __future__ import annotations

from typing import Callable

from ..errors import QuadratureError

DEFAULT_TOL = 1e-10
DEFAULT_MAX_DEPTH = 40


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> tuple[float, float]:
    """Integrate ``f`` over [a, b] to absolute tolerance ``tol``.

    Each panel is accepted once ``|S_left + S_right - S_whole| <= 15 tol_panel``
    and then corrected by the Richardson term ``(S2 - S1) / 15``.  The panel
    tolerance halves at every bisection.

    Returns:
        ``(integral, error_estimate)``; reversed bounds give the negated value.

    Raises:
        QuadratureError: if a panel still fails the test at ``max_depth``.
    """
    if a == b:
        return 0.0, 0.0
    if a > b:
        value, err = adaptive_simpson(f, b, a, tol, max_depth)
        return -value, err

    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    total = 0.0
    err_total = 0.0
    # Explicit stack avoids Python's recursion limit at depth 40.
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]
    while stack:
        lo, hi, flo, fmid, fhi, s_whole, ptol, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - s_whole
        if abs(delta) <= 15.0 * ptol or (hi - lo) <= 1e-15 * max(1.0, abs(lo)):
            total += left + right + delta / 15.0
            err_total += abs(delta) / 15.0
            continue
        if depth >= max_depth:
            raise QuadratureError(
                f"adaptive Simpson did not converge on [{lo}, {hi}] at depth {depth}"
            )
        stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * ptol, depth + 1))
        stack.append((lo, mid, flo, flm, fmid, left, 0.5 * ptol, depth + 1))
    return total, err_total
