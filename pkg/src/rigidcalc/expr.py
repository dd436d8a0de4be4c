"""Text syntax for operators and parameter polynomials.

Grammar (whitespace insensitive)::

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := factor ('*' factor)*
    factor     := atom ['^' nat]
    atom       := INT ['/' INT] | 'a' | 'b' | 't' | 'mu' | 'T' | 'x' | 'd' | '(' expression ')'

``x`` and ``d`` do not commute; products are taken left to right and ``T``
is shorthand for ``x*d``.  Everything is evaluated in normal-ordered delta
form and converted to theta form at the end.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import SYMBOLS, ParamPoly, ThetaPoly
from .errors import ExpressionSyntaxError, NonIntegerExponent
from .operators import DeltaFormOperator, ThetaFormOperator, format_operator, to_theta_form

_TOKEN = re.compile(r"\s*(?:(\d+)|(mu|[abtxdT])|(\^|\*|\+|-|/|\(|\)))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    n = len(src)
    while pos < n:
        if src[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(src, pos)
        if not m:
            raise ExpressionSyntaxError(f"unexpected character {src[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(Token("int", m.group(1), start))
        elif m.group(2):
            tokens.append(Token("name", m.group(2), start))
        else:
            tokens.append(Token("op", m.group(3), start))
        pos = m.end()
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, src: str, allow_operators: bool):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0
        self.allow_operators = allow_operators

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.take()
        if tok.text != text:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ExpressionSyntaxError(f"expected {text!r}, found {found}", tok.pos)
        return tok

    def parse(self) -> DeltaFormOperator:
        if self.peek().kind == "end":
            raise ExpressionSyntaxError("empty expression", 0)
        value = self.expression()
        tok = self.peek()
        if tok.kind != "end":
            raise ExpressionSyntaxError(f"unexpected {tok.text!r}", tok.pos)
        return value

    def expression(self) -> DeltaFormOperator:
        negate = False
        if self.peek().text in ("+", "-"):
            negate = self.take().text == "-"
        value = self.term()
        if negate:
            value = -value
        while self.peek().text in ("+", "-"):
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> DeltaFormOperator:
        value = self.factor()
        while self.peek().text == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> DeltaFormOperator:
        base = self.atom()
        if self.peek().text == "^":
            caret = self.take()
            tok = self.peek()
            if tok.text in ("-", "(") or tok.kind == "name":
                raise NonIntegerExponent("exponent must be a non-negative integer literal", tok.pos)
            if tok.kind != "int":
                raise ExpressionSyntaxError("missing exponent after '^'", caret.pos)
            self.take()
            if self.peek().text == "/":
                raise NonIntegerExponent("exponent must be a non-negative integer literal", tok.pos)
            base = base ** int(tok.text)
        return base

    def atom(self) -> DeltaFormOperator:
        tok = self.take()
        if tok.kind == "int":
            value = Fraction(int(tok.text))
            if self.peek().text == "/":
                self.take()
                den = self.take()
                if den.kind != "int":
                    raise ExpressionSyntaxError("expected an integer denominator", den.pos)
                if int(den.text) == 0:
                    raise ExpressionSyntaxError("zero denominator", den.pos)
                value = value / int(den.text)
            return DeltaFormOperator.const(value)
        if tok.kind == "name":
            if tok.text in SYMBOLS:
                return DeltaFormOperator.const(ParamPoly.symbol(tok.text))
            if not self.allow_operators:
                raise ExpressionSyntaxError(f"{tok.text!r} is not allowed in a parameter expression", tok.pos)
            if tok.text == "x":
                return DeltaFormOperator.x()
            if tok.text == "d":
                return DeltaFormOperator.d()
            return DeltaFormOperator({(1, 1): 1})
        if tok.text == "(":
            value = self.expression()
            self.expect(")")
            return value
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExpressionSyntaxError(f"unexpected {found}", tok.pos)


def parse_delta(src: str) -> DeltaFormOperator:
    """Parse into normal-ordered delta form."""
    return _Parser(src, allow_operators=True).parse()


def parse_operator(src: str) -> ThetaFormOperator:
    """Parse into theta form.

    Expressions whose delta form needs negative x-powers in theta form (e.g.
    ``d``) are rejected; use :func:`parse_delta` with :func:`to_theta_form`.
    """
    delta = parse_delta(src)
    e, op = to_theta_form(delta)
    if e:
        raise ExpressionSyntaxError(
            f"expression is not polynomial in x in theta form (needs x^{e} on the left)", 0
        )
    return op


def parse_param(src: str) -> ParamPoly:
    delta = _Parser(src, allow_operators=False).parse()
    return delta.terms.get((0, 0), ParamPoly.const(0))


def parse_theta_poly(src: str) -> ThetaPoly:
    """Parse an expression that may only involve ``T`` and the parameters."""
    op = parse_operator(src)
    if set(op.terms) - {0}:
        raise ExpressionSyntaxError("expected a polynomial in T without x", 0)
    return op.coeff(0)


def print_operator(op: ThetaFormOperator) -> str:
    return format_operator(op)
