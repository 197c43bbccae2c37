"""Exact arithmetic expressions for CLI flags.

Grammar: +, -, *, /, ^ (power), parentheses, decimal integers.  The
whole expression is evaluated over exact rationals, so division never
rounds; callers that need an integer use :func:`evaluate_int`, which
rejects non-integral results.  This lets flags like a t3-family residue
be written as ``(13^12-1)/12`` instead of a 13-digit literal.
"""

from __future__ import annotations

import re

from .backend import denominator, numerator, rational

__all__ = ["ExpressionError", "evaluate_int", "evaluate_rational"]


class ExpressionError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([()+\-*/^]))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"unexpected character {text[pos:].lstrip()[:1]!r} in {text!r}")
        tokens.append(m.group(1) or m.group(2))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str], source: str):
        self.tokens = tokens
        self.pos = 0
        self.source = source

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, tok: str):
        if self.take() != tok:
            raise ExpressionError(f"expected {tok!r} in {self.source!r}")

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            raise ExpressionError(f"trailing input {self.peek()!r} in {self.source!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                value = value + self.term()
            else:
                value = value - self.term()
        return value

    def term(self):
        value = self.factor()
        while self.peek() in ("*", "/"):
            if self.take() == "*":
                value = value * self.factor()
            else:
                divisor = self.factor()
                if divisor == 0:
                    raise ExpressionError(f"division by zero in {self.source!r}")
                value = value / divisor
        return value

    def factor(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        return sign * self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exponent = self.factor()
            if denominator(exponent) != 1:
                raise ExpressionError(f"non-integer exponent in {self.source!r}")
            e = numerator(exponent)
            if e < 0 and base == 0:
                raise ExpressionError(f"zero raised to a negative power in {self.source!r}")
            return base**e
        return base

    def atom(self):
        tok = self.take()
        if tok is None:
            raise ExpressionError(f"unexpected end of expression in {self.source!r}")
        if tok == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok.isdigit():
            return rational(int(tok))
        raise ExpressionError(f"unexpected token {tok!r} in {self.source!r}")


def evaluate_rational(text: str):
    """Evaluate an expression to an exact rational."""
    tokens = _tokenize(text)
    if not tokens:
        raise ExpressionError("empty expression")
    return _Parser(tokens, text).parse()


def evaluate_int(text: str) -> int:
    """Evaluate an expression that must come out to an integer."""
    value = evaluate_rational(text)
    if denominator(value) != 1:
        raise ExpressionError(f"{text!r} evaluates to the non-integer {value}")
    return numerator(value)
