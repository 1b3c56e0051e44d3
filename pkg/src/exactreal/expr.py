"""Expression ASTs, parsing and evaluation for the command line.

Grammar: usual precedence (* / over + -), parentheses, unary minus,
decimal literals, the variable ``x``, the constant ``pi`` and the
functions max, abs, sqrt, csqrt.  Non-dyadic decimal literals are kept
as exact rationals and realized through exact division, so "0.1" stays
exactly one tenth.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .algorithms import (
    Complex,
    csqrt,
    real_abs,
    real_max,
    real_pi,
    real_sqrt,
)
from .creal import CReal
from .errors import ParseError


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int = field(default=0, compare=False)


Expr = Union[Num, Var, Const, BinOp, Neg, Call]

_FUNCTIONS = {"max": 2, "abs": 1, "sqrt": 1, "csqrt": 2}
_CONSTANTS = {"pi"}

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<ident>[A-Za-z_]\w*)|(?P<op>[-+*/(),]))"
)


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            if src[pos:].strip():
                raise ParseError(f"unexpected character {src[pos]!r}", pos)
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, symbol: str):
        kind, text, pos = self.next()
        if kind != "op" or text != symbol:
            raise ParseError(f"expected {symbol!r}", pos)

    def parse(self) -> Expr:
        e = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return e

    def expr(self) -> Expr:
        left = self.term()
        while True:
            kind, text, pos = self.peek()
            if kind == "op" and text in "+-":
                self.next()
                left = BinOp(text, left, self.term(), pos)
            else:
                return left

    def term(self) -> Expr:
        left = self.unary()
        while True:
            kind, text, pos = self.peek()
            if kind == "op" and text in "*/":
                self.next()
                left = BinOp(text, left, self.unary(), pos)
            else:
                return left

    def unary(self) -> Expr:
        kind, text, pos = self.peek()
        if kind == "op" and text == "-":
            self.next()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Expr:
        kind, text, pos = self.next()
        if kind == "num":
            return Num(Fraction(text))
        if kind == "ident":
            if text in _CONSTANTS:
                return Const(text)
            if text in _FUNCTIONS:
                self.expect_op("(")
                args = [self.expr()]
                while True:
                    k, t, p = self.peek()
                    if k == "op" and t == ",":
                        self.next()
                        args.append(self.expr())
                    else:
                        break
                self.expect_op(")")
                if len(args) != _FUNCTIONS[text]:
                    raise ParseError(
                        f"{text} takes {_FUNCTIONS[text]} argument(s)", pos
                    )
                return Call(text, tuple(args), pos)
            if text == "x":
                return Var("x")
            raise ParseError(f"unknown name {text!r}", pos)
        if kind == "op" and text == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)


def parse(src: str) -> Expr:
    return _Parser(src).parse()


def render(e: Expr) -> str:
    """Parenthesized rendering; parse(render(e)) == e structurally."""
    if isinstance(e, Num):
        v = e.value
        if v.denominator == 1:
            return str(v.numerator)
        # literals always come from decimal source text, so the
        # denominator factors as 2**k * 5**j
        d = v.denominator
        k = j = 0
        while d % 2 == 0:
            d //= 2
            k += 1
        while d % 5 == 0:
            d //= 5
            j += 1
        if d != 1:
            raise ValueError(f"{v} has no finite decimal form")
        digits = max(k, j)
        scaled = v.numerator * 10 ** digits // v.denominator
        s = str(scaled).rjust(digits + 1, "0")
        return f"{s[:-digits]}.{s[-digits:]}"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Const):
        return e.name
    if isinstance(e, Neg):
        return f"(-{render(e.operand)})"
    if isinstance(e, BinOp):
        return f"({render(e.left)}{e.op}{render(e.right)})"
    if isinstance(e, Call):
        return f"{e.name}({', '.join(render(a) for a in e.args)})"
    raise TypeError(f"not an expression: {e!r}")


def _realize_number(v: Fraction) -> CReal:
    den = v.denominator
    if den & (den - 1) == 0:
        return CReal.from_fraction(v)
    # exact rational realized through exact integer division
    return CReal.from_int(v.numerator) / CReal.from_int(den)


def evaluate(e: Expr, env=None, budget: int | None = None):
    """Evaluate to a CReal (or Complex for csqrt results)."""
    env = env or {}

    def go(node):
        if isinstance(node, Num):
            return _realize_number(node.value)
        if isinstance(node, Var):
            if node.name not in env:
                raise ParseError(f"unbound variable {node.name!r}", 0)
            return env[node.name]
        if isinstance(node, Const):
            return real_pi()
        if isinstance(node, Neg):
            return -go(node.operand)
        if isinstance(node, BinOp):
            left = go(node.left)
            right = go(node.right)
            if isinstance(left, Complex) or isinstance(right, Complex):
                left = left if isinstance(left, Complex) else Complex(left, 0)
                right = right if isinstance(right, Complex) else Complex(right, 0)
                if node.op == "+":
                    return left + right
                if node.op == "-":
                    return left - right
                if node.op == "*":
                    return left * right
                raise ParseError("complex division is not supported", node.pos)
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return left * right
            return left / right
        if isinstance(node, Call):
            args = [go(a) for a in node.args]
            if any(isinstance(a, Complex) for a in args) and node.name != "csqrt":
                raise ParseError(
                    f"{node.name} does not accept complex arguments", node.pos
                )
            if node.name == "max":
                return real_max(args[0], args[1], budget)
            if node.name == "abs":
                return real_abs(args[0], budget)
            if node.name == "sqrt":
                return real_sqrt(args[0], budget)
            if node.name == "csqrt":
                args = [
                    a if isinstance(a, CReal) else a for a in args
                ]
                return csqrt(Complex(args[0], args[1]), budget)
        raise TypeError(f"not an expression: {node!r}")

    return go(e)
