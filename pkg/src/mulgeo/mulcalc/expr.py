"""Curve-expression language: AST, recursive-descent parser, printer, evaluators.

Grammar (whitespace-insensitive)::

    expr   := term (("+*" | "-*") term)*
    term   := factor ((".*" | "/*") factor)*
    factor := unary ("^*" real)?
    unary  := "-*" unary | atom
    atom   := "e^" real | "e^{" real "}" | positive-decimal | "s"
            | func "(" expr ")" | "(" expr ")"
    func   := "msin" | "mcos" | "mtan"

Binary operators are left-associative; ``^*`` binds tightest, then ``.*`` and
``/*``, then ``+*`` and ``-*``.  All operators are the multiplicative ones of
:mod:`mulgeo.mularith`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Union

from .. import mularith as ma
from ..errors import DomainError, EvalError, MulZeroDivisionError, ParseError
from ..jet import Jet
from ..mularith import MulScalar

__all__ = [
    "Const",
    "Param",
    "Neg",
    "BinOp",
    "Pow",
    "Func",
    "CurveExpr",
    "parse",
    "to_text",
    "evaluate",
    "evaluate_log_jet",
]

Span = tuple[int, int]


@dataclass(frozen=True)
class Const:
    logval: float
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Param:
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class BinOp:
    op: str  # one of "+*", "-*", ".*", "/*"
    left: "Node"
    right: "Node"
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: float
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Func:
    name: str  # "msin" | "mcos" | "mtan"
    arg: "Node"
    span: Span | None = field(default=None, compare=False, repr=False)


Node = Union[Const, Param, Neg, BinOp, Pow, Func]

FUNCS = ("msin", "mcos", "mtan")
_PREC = {"+*": 1, "-*": 1, ".*": 2, "/*": 2}


@dataclass(frozen=True)
class CurveExpr:
    """A parsed expression together with its source text."""

    ast: Node
    source: str = field(default="", compare=False)

    def __str__(self) -> str:
        return to_text(self.ast)

    def __call__(self, s: MulScalar) -> MulScalar:
        return evaluate(self.ast, s)


# --------------------------------------------------------------------------
# Lexer
# --------------------------------------------------------------------------

_UREAL = r"(?:\d+(?:\.\d+)?|\.\d+)(?:[eE][+-]?\d+)?"
_REAL = rf"[+-]?{_UREAL}"
_TOKEN_RE = re.compile(
    rf"""
    (?P<ws>\s+)
  | (?P<op>\+\*|-\*|\.\*|/\*|\^\*)
  | (?P<econst>e\^(?:\{{\s*(?P<braced>{_REAL})\s*\}}|(?P<bare>{_REAL})))
  | (?P<num>{_UREAL})
  | (?P<sign>[+-])
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<lparen>\()
  | (?P<rparen>\))
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str  # op, econst, num, ident, lparen, rparen, real, end
    text: str
    pos: int
    value: float = 0.0


def _lex(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, (), text)
        kind = m.lastgroup
        if kind == "braced" or kind == "bare":
            kind = "econst"
        if kind != "ws":
            value = 0.0
            if kind == "econst":
                value = float(m.group("braced") or m.group("bare"))
            elif kind == "num":
                value = float(m.group())
            toks.append(_Tok(kind, m.group(), pos, value))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------

_ATOM_START = ("e^<real>", "<positive-decimal>", "s", "msin", "mcos", "mtan", "(", "-*")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _lex(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected) -> None:
        tok = self.tok
        what = "end of input" if tok.kind == "end" else f"token {tok.text!r}"
        raise ParseError(f"unexpected {what}", tok.pos, expected, self.text)

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail(("+*", "-*", ".*", "/*", "^*", "<end>"))
        return node

    def expr(self) -> Node:
        left = self.term()
        while self.tok.kind == "op" and self.tok.text in ("+*", "-*"):
            op = self.tok.text
            self.i += 1
            right = self.term()
            left = BinOp(op, left, right, (_start(left), _end(right)))
        return left

    def term(self) -> Node:
        left = self.factor()
        while self.tok.kind == "op" and self.tok.text in (".*", "/*"):
            op = self.tok.text
            self.i += 1
            right = self.factor()
            left = BinOp(op, left, right, (_start(left), _end(right)))
        return left

    def factor(self) -> Node:
        base = self.unary()
        if self.tok.kind == "op" and self.tok.text == "^*":
            self.i += 1
            exponent = self.real()
            return Pow(base, exponent, (_start(base), self.toks[self.i - 1].pos + len(self.toks[self.i - 1].text)))
        return base

    def real(self) -> float:
        sign = 1.0
        if self.tok.kind == "sign":
            sign = -1.0 if self.tok.text == "-" else 1.0
            self.i += 1
        if self.tok.kind != "num":
            self.fail(("<real>",))
        value = self.tok.value
        self.i += 1
        return sign * value

    def unary(self) -> Node:
        tok = self.tok
        if tok.kind == "op" and tok.text == "-*":
            self.i += 1
            operand = self.unary()
            return Neg(operand, (tok.pos, _end(operand)))
        return self.atom()

    def atom(self) -> Node:
        tok = self.tok
        if tok.kind == "econst":
            self.i += 1
            return Const(tok.value, (tok.pos, tok.pos + len(tok.text)))
        if tok.kind == "num":
            if not tok.value > 0.0:
                raise ParseError("constants must be positive reals", tok.pos, (), self.text)
            self.i += 1
            return Const(math.log(tok.value), (tok.pos, tok.pos + len(tok.text)))
        if tok.kind == "ident":
            if tok.text == "s":
                self.i += 1
                return Param((tok.pos, tok.pos + 1))
            if tok.text in FUNCS:
                self.i += 1
                self.expect("lparen", "(")
                arg = self.expr()
                close = self.expect("rparen", ")", (".*", "/*", "+*", "-*", "^*"))
                return Func(tok.text, arg, (tok.pos, close.pos + 1))
            raise ParseError(f"unknown identifier {tok.text!r}", tok.pos, _ATOM_START, self.text)
        if tok.kind == "lparen":
            self.i += 1
            inner = self.expr()
            self.expect("rparen", ")", (".*", "/*", "+*", "-*", "^*"))
            return inner
        self.fail(_ATOM_START)
        raise AssertionError  # unreachable

    def expect(self, kind: str, spelling: str, also=()) -> _Tok:
        tok = self.tok
        if tok.kind != kind:
            self.fail((spelling,) + tuple(also))
        self.i += 1
        return tok


def _start(node: Node) -> int:
    return node.span[0] if node.span else 0


def _end(node: Node) -> int:
    return node.span[1] if node.span else 0


def parse(text: str) -> CurveExpr:
    """Parse ``text`` into a :class:`CurveExpr`.

    Raises:
        ParseError: with the byte offset and the set of acceptable tokens.
    """
    return CurveExpr(_Parser(text).parse(), text)


# --------------------------------------------------------------------------
# Printer
# --------------------------------------------------------------------------


def _fmt_real(x: float) -> str:
    return repr(float(x))


def to_text(node: Node | CurveExpr, parent_prec: int = 0, right: bool = False) -> str:
    """Print an AST in the grammar above; ``parse(to_text(a)).ast == a``."""
    if isinstance(node, CurveExpr):
        node = node.ast
    if isinstance(node, Const):
        return f"e^{{{_fmt_real(node.logval)}}}"
    if isinstance(node, Param):
        return "s"
    if isinstance(node, Func):
        return f"{node.name}({to_text(node.arg)})"
    if isinstance(node, Neg):
        return f"-* {to_text(node.operand, 4)}"
    if isinstance(node, Pow):
        # "-* x ^* k" parses as (-* x) ^* k and a factor takes one "^*", so a
        # power below a unary or another power needs brackets
        text = f"{to_text(node.base, 4)} ^* {_fmt_real(node.exponent)}"
        return f"({text})" if parent_prec == 4 else text
    if isinstance(node, BinOp):
        prec = _PREC[node.op]
        text = f"{to_text(node.left, prec)} {node.op} {to_text(node.right, prec, right=True)}"
        if prec < parent_prec or (right and prec == parent_prec):
            return f"({text})"
        return text
    raise TypeError(f"not an expression node: {node!r}")


# --------------------------------------------------------------------------
# Evaluation
# --------------------------------------------------------------------------

_SCALAR_BINOPS = {"+*": ma.madd, "-*": ma.msub, ".*": ma.mmul, "/*": ma.mdiv}
_SCALAR_FUNCS = {"msin": ma.msin, "mcos": ma.mcos, "mtan": ma.mtan}


def evaluate(node: Node | CurveExpr, s: MulScalar) -> MulScalar:
    """Value of the expression at the multiplicative parameter ``s``.

    Raises:
        EvalError: on a domain or pole failure, carrying the node's source span.
    """
    if isinstance(node, CurveExpr):
        node = node.ast
    try:
        if isinstance(node, Const):
            return MulScalar(node.logval)
        if isinstance(node, Param):
            return s
        if isinstance(node, Neg):
            return ma.mneg(evaluate(node.operand, s))
        if isinstance(node, BinOp):
            return _SCALAR_BINOPS[node.op](evaluate(node.left, s), evaluate(node.right, s))
        if isinstance(node, Pow):
            return ma.mpow(evaluate(node.base, s), node.exponent)
        if isinstance(node, Func):
            return _SCALAR_FUNCS[node.name](evaluate(node.arg, s))
    except EvalError:
        raise
    except (DomainError, MulZeroDivisionError, OverflowError) as exc:
        raise EvalError(str(exc), node.span) from exc
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_log_jet(node: Node | CurveExpr, u: float, order: int) -> Jet:
    """Jet of the log-image ``g(w) = log f(e^w)`` about ``w = u``.

    Each multiplicative operator becomes the classical one on log-images, so
    the jet carries the exact multiplicative derivatives up to ``order``.
    """
    if isinstance(node, CurveExpr):
        node = node.ast
    try:
        return _jet(node, u, order)
    except EvalError:
        raise
    except (DomainError, MulZeroDivisionError) as exc:
        raise EvalError(str(exc), getattr(node, "span", None)) from exc


def _jet(node: Node, u: float, order: int) -> Jet:
    try:
        if isinstance(node, Const):
            return Jet.constant(node.logval, order)
        if isinstance(node, Param):
            return Jet.variable(u, order)
        if isinstance(node, Neg):
            return -_jet(node.operand, u, order)
        if isinstance(node, BinOp):
            a = _jet(node.left, u, order)
            b = _jet(node.right, u, order)
            if node.op == "+*":
                return a + b
            if node.op == "-*":
                return a - b
            if node.op == ".*":
                return a * b
            if b.value == 0.0:
                raise MulZeroDivisionError("division by the multiplicative zero 0* = 1")
            return a / b
        if isinstance(node, Pow):
            base = _jet(node.base, u, order)
            k = node.exponent
            if float(k).is_integer() and k < 0:
                if base.value == 0.0:
                    raise MulZeroDivisionError("negative power of the multiplicative zero")
                return 1.0 / base._ipow(int(-k))
            if not float(k).is_integer() and base.value < 0.0:
                raise DomainError(f"non-integer power {k} of a multiplicative negative number")
            return base**k
        if isinstance(node, Func):
            arg = _jet(node.arg, u, order)
            if node.name == "msin":
                return arg.sin()
            if node.name == "mcos":
                return arg.cos()
            return arg.tan()
    except EvalError:
        raise
    except (DomainError, MulZeroDivisionError) as exc:
        raise EvalError(str(exc), node.span) from exc
    raise TypeError(f"not an expression node: {node!r}")
