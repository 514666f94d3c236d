"""Parser for scalar and polynomial literals.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | 'z' | 'x' INT | '(' expr ')'

``z`` is the primitive root zeta_m of the session order m; ``x0, x1, ...``
are the polynomial variables.  Division is only by nonzero scalars, and
only ``z`` may carry a negative exponent.
"""
from __future__ import annotations

import re

from .errors import ParseError
from .poly import Polynomial
from .scalar import CyclotomicScalar, zeta

_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+)|(z)|([-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, pos + 1)
        col = m.start(m.lastindex) + 1
        if m.group(1):
            out.append(("int", int(m.group(1)), col))
        elif m.group(2):
            out.append(("var", int(m.group(2)[1:]), col))
        elif m.group(3):
            out.append(("z", None, col))
        else:
            out.append((m.group(4), None, col))
        pos = m.end()
    out.append(("end", None, len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str, order: int, nvars: int, where: str):
        self.text = text
        self.order = order
        self.nvars = nvars
        self.where = where
        self.toks = _tokenize(text)
        self.i = 0

    def error(self, msg, col=None):
        if col is None:
            col = self.toks[self.i][2]
        raise ParseError(msg, self.text, col, self.where)

    def peek(self):
        return self.toks[self.i][0]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self) -> Polynomial:
        if self.peek() == "end":
            self.error("empty literal")
        p = self.expr()
        if self.peek() != "end":
            self.error("unexpected token")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek() in ("*", "/"):
            op, _, col = self.take()
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    self.error("division by zero or by a non-scalar", col)
                p = p * q.constant_term().inverse()
        return p

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        kind = self.peek()
        base = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            if self.peek() != "int":
                self.error("expected integer exponent")
            k = self.take()[1]
            if neg:
                if kind != "z":
                    self.error("negative exponent only allowed on z")
                return Polynomial.constant(self.nvars, zeta(self.order, -k))
            return base ** k
        return base

    def atom(self):
        kind, val, col = self.take()
        if kind == "int":
            return Polynomial.constant(self.nvars, CyclotomicScalar.rational(val, self.order))
        if kind == "z":
            return Polynomial.constant(self.nvars, zeta(self.order, 1))
        if kind == "var":
            if val >= self.nvars:
                self.error(f"variable x{val} out of range (have {self.nvars} variables)", col)
            return Polynomial.var(self.nvars, val)
        if kind == "(":
            p = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return p
        self.error("unexpected token", col)


def parse_polynomial(text, nvars: int, order: int = 1, where: str = "") -> Polynomial:
    if isinstance(text, int):
        return Polynomial.constant(nvars, CyclotomicScalar.rational(text, order))
    if not isinstance(text, str):
        raise ParseError(f"expected a literal string, got {type(text).__name__}", where=where)
    return _Parser(text, order, nvars, where).parse()


def parse_scalar(text, order: int = 1, where: str = "") -> CyclotomicScalar:
    if isinstance(text, int):
        return CyclotomicScalar.rational(text, order)
    p = parse_polynomial(text, 0, order, where)
    return p.constant_term().lift(order) if p.constant_term().order != order else p.constant_term()
