"""Recursive-descent parser for expressions, series literals and fractional complex literals.

Expression grammar, lowest precedence first::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ['^' '{' INT 'a' '}']
    atom   := NUMBER | 'x' | FUNC '(' expr ')' | '(' expr ')'
    FUNC   := 'E_a' | 'sin_a' | 'cos_a'

``x^{ka}`` is the monomial x^{kα}; any other base raised to ``{ka}`` becomes a
composition. Function arguments are written as α-powers, ``E_a(x^{1a})`` or
``E_a((g)^{1a})``, matching the usual E_α(z^α) notation. Whitespace is
insignificant.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .expr import Add, Compose, Const, CosA, Div, ExprNode, FracMonomial, MLExp, Mul, SinA, Var
from .fcomplex import FractionalComplex
from .series import FracPowerSeries

__all__ = ["parse_expr", "parse_series", "parse_fcomplex"]

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_INT = re.compile(r"\d+")
_FUNCS = {"E_a": MLExp, "sin_a": SinA, "cos_a": CosA}


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip()
        return self.src.startswith(token, self.pos)

    def expect(self, token: str):
        self.skip()
        if not self.src.startswith(token, self.pos):
            raise ParseError(f"unexpected {self._found()}", self.pos, (token,))
        self.pos += len(token)

    def _found(self) -> str:
        if self.pos >= len(self.src):
            return "end of input"
        return repr(self.src[self.pos])

    def parse(self) -> ExprNode:
        self.skip()
        if self.pos >= len(self.src):
            raise ParseError("empty expression", 0, ("expression",))
        node = self.expr()
        self.skip()
        if self.pos != len(self.src):
            raise ParseError(f"unexpected {self._found()}", self.pos, ("+", "-", "*", "/", "end of input"))
        return node

    def expr(self) -> ExprNode:
        node = self.term()
        while True:
            if self.peek("+"):
                self.pos += 1
                node = Add(node, self.term())
            elif self.peek("-"):
                self.pos += 1
                node = Add(node, Mul(Const(-1.0), self.term()))
            else:
                return node

    def term(self) -> ExprNode:
        node = self.factor()
        while True:
            if self.peek("*"):
                self.pos += 1
                node = Mul(node, self.factor())
            elif self.peek("/"):
                self.pos += 1
                node = Div(node, self.factor())
            else:
                return node

    def factor(self) -> ExprNode:
        if self.peek("-"):
            self.pos += 1
            inner = self.factor()
            if isinstance(inner, Const):
                return Const(-inner.value)
            return Mul(Const(-1.0), inner)
        base = self.atom()
        if not self.peek("^"):
            return base
        self.pos += 1
        self.expect("{")
        self.skip()
        m = _INT.match(self.src, self.pos)
        if not m:
            raise ParseError(f"unexpected {self._found()}", self.pos, ("integer",))
        self.pos = m.end()
        k = int(m.group())
        self.expect("a")
        self.expect("}")
        if isinstance(base, Var):
            return FracMonomial(k)
        return Compose(FracMonomial(k), base)

    def atom(self) -> ExprNode:
        self.skip()
        start = self.pos
        for name, cls in _FUNCS.items():
            if self.src.startswith(name, self.pos):
                self.pos += len(name)
                self.expect("(")
                self.skip()
                arg_at = self.pos
                arg = self.expr()
                self.expect(")")
                if arg == FracMonomial(1):
                    return cls()
                if isinstance(arg, Compose) and arg.outer == FracMonomial(1):
                    return Compose(cls(), arg.inner)
                raise ParseError(
                    f"argument of {name} must be an alpha-power", arg_at, ("x^{1a}", "(...)^{1a}")
                )
        if self.peek("("):
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if self.peek("x"):
            self.pos += 1
            return Var()
        m = _NUMBER.match(self.src, self.pos)
        if m:
            self.pos = m.end()
            return Const(float(m.group()))
        raise ParseError(f"unexpected {self._found()}", start, ("number", "x", "E_a", "sin_a", "cos_a", "("))


def parse_expr(src: str) -> ExprNode:
    """Parse ``src`` into an expression tree; raises :class:`ParseError` with a byte offset."""
    return _Parser(src).parse()


_SERIES = re.compile(r"\s*\[(?P<body>[^\]]*)\]\s*@\s*(?P<alpha>\S+)\s*$")


def parse_series(src: str) -> FracPowerSeries:
    """Parse a series literal ``"[c0, c1, ...]@alpha"``."""
    m = _SERIES.match(src)
    if not m:
        raise ParseError("malformed series literal", 0, ("[c0, c1, ...]@alpha",))
    body = m.group("body").strip()
    coeffs = []
    if body:
        offset = m.start("body")
        for piece in body.split(","):
            text = piece.strip()
            try:
                coeffs.append(float(text))
            except ValueError:
                raise ParseError(f"bad coefficient {text!r}", offset, ("number",)) from None
            offset += len(piece) + 1
    try:
        alpha = float(m.group("alpha"))
    except ValueError:
        raise ParseError("bad order", m.start("alpha"), ("number",)) from None
    return FracPowerSeries(tuple(coeffs), alpha)


_FC = re.compile(
    r"\s*(?P<a>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*"
    r"(?:(?P<sign>[+-])\s*i\^a\s*(?P<b>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?)?\s*$"
)


def parse_fcomplex(src: str, alpha) -> FractionalComplex:
    """Parse ``"a + i^a b"`` (either part optional) into a :class:`FractionalComplex`."""
    m = _FC.match(src)
    if not m or (m.group("a") is None and m.group("sign") is None):
        raise ParseError("malformed fractional complex literal", 0, ("a + i^a b",))
    a = float(m.group("a") or 0.0)
    b = 0.0
    if m.group("sign"):
        b = float(m.group("b") or 1.0)
        if m.group("sign") == "-":
            b = -b
    return FractionalComplex(a, b, alpha)
