"""Random multiplicative expressions paired with an independent log-image.

Each generated expression comes with ``g(u) = log f(e^u)`` written directly
in ``math``, so tests can check the package's evaluator and jets against code
that shares nothing with it.  Divisors are kept away from 0* by construction.

Each expression also carries ``d``, the text of its multiplicative derivative
built by symbolic rules on the tree.  Inside templates ``¤`` stands for the
derivative of the placeholder ``§``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from hypothesis import strategies as st


@dataclass(frozen=True)
class GenExpr:
    text: str
    g: Callable[[float], float]
    d: str = "e^0"

    def sub(self, inner: "GenExpr") -> "GenExpr":
        """The composite f(inner(s)), obtained by textual substitution."""
        put = lambda t: t.replace("§", f"({inner.text})")  # noqa: E731
        return GenExpr(put(self.text), lambda u: self.g(inner.g(u)), put(self.d).replace("¤", f"({inner.d})"))


PARAM = GenExpr("s", lambda u: u, "e^1")


def _leaf(rng: random.Random) -> GenExpr:
    k = rng.randrange(3)
    if k == 0:
        return GenExpr("§", lambda u: u, "¤")
    c = round(rng.uniform(-2.0, 2.0), 3)
    if k == 1:
        return GenExpr(f"e^{c!r}", lambda u: c)
    d = round(rng.uniform(0.2, 5.0), 3)
    return GenExpr(f"{d!r}", lambda u: math.log(d))


def _node(rng: random.Random, depth: int) -> GenExpr:
    if depth == 0 or rng.random() < 0.25:
        return _leaf(rng)
    a = _node(rng, depth - 1)
    k = rng.randrange(8)
    if k == 0:
        b = _node(rng, depth - 1)
        return GenExpr(f"({a.text} +* {b.text})", lambda u: a.g(u) + b.g(u), f"(({a.d}) +* ({b.d}))")
    if k == 1:
        b = _node(rng, depth - 1)
        return GenExpr(f"({a.text} -* {b.text})", lambda u: a.g(u) - b.g(u), f"(({a.d}) -* ({b.d}))")
    if k == 2:
        b = _node(rng, depth - 1)
        return GenExpr(
            f"({a.text} .* {b.text})",
            lambda u: a.g(u) * b.g(u),
            f"(({a.d}) .* {b.text} +* {a.text} .* ({b.d}))",
        )
    if k == 3:
        b = _node(rng, depth - 1)
        c = round(rng.uniform(1.5, 3.0), 3)
        den = f"(e^{c!r} +* msin({b.text}))"
        dden = f"(mcos({b.text}) .* ({b.d}))"
        return GenExpr(
            f"({a.text} /* {den})",
            lambda u: a.g(u) / (c + math.sin(b.g(u))),
            f"((({a.d}) .* {den} -* {a.text} .* {dden}) /* ({den} ^* 2))",
        )
    if k == 4:
        return GenExpr(f"msin({a.text})", lambda u: math.sin(a.g(u)), f"(mcos({a.text}) .* ({a.d}))")
    if k == 5:
        return GenExpr(f"mcos({a.text})", lambda u: math.cos(a.g(u)), f"(-* msin({a.text}) .* ({a.d}))")
    if k == 6:
        return GenExpr(f"({a.text}) ^* 2", lambda u: a.g(u) ** 2, f"(e^2 .* {a.text} .* ({a.d}))")
    return GenExpr(f"-* ({a.text})", lambda u: -a.g(u), f"-* ({a.d})")


def random_template(rng: random.Random, depth: int = 3) -> GenExpr:
    """Expression with the parameter left as the placeholder ``§``."""
    return _node(rng, depth)


def random_expr(rng: random.Random, depth: int = 3) -> GenExpr:
    return random_template(rng, depth).sub(PARAM)


def bounded_expr(rng: random.Random, depth: int = 3) -> GenExpr:
    """Random expression wrapped so its log-image stays in [-1, 1].

    Used as the inner function of compositions and integrands, keeping
    derivatives of the composite at modest size.
    """
    e = random_expr(rng, depth)
    return GenExpr(f"msin({e.text})", lambda u: math.sin(e.g(u)), f"(mcos({e.text}) .* ({e.d}))")


exprs = st.builds(random_expr, st.randoms(use_true_random=False))
bounded_exprs = st.builds(bounded_expr, st.randoms(use_true_random=False))
templates = st.builds(random_template, st.randoms(use_true_random=False))
