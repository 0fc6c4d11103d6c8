"""Recursive-descent parser for polynomial expressions in ``x0 ... xN``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | atom ('^' INT)?
    atom   := INT | VAR | '(' expr ')'

Division is only allowed by a nonzero constant, which is how rational
literals such as ``2/3`` are read.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from hilbstab.algebra import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class Token(NamedTuple):
    kind: str
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[-+*/^()]))")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            while text[pos].isspace():
                pos += 1
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, num_vars: int):
        self.text = text
        self.num_vars = num_vars
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.pos, self.text)

    def accept(self, op: str) -> Token | None:
        if self.tok.kind == "op" and self.tok.value == op:
            tok = self.tok
            self.i += 1
            return tok
        return None

    def parse(self) -> Polynomial:
        if self.tok.kind == "end":
            self.error("empty expression")
        result = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected token {self.tok.value!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            if self.accept("*"):
                result = result * self.factor()
            elif (slash := self.accept("/")) is not None:
                divisor = self.factor()
                if not divisor.is_constant():
                    self.error("division by a non-constant expression", slash)
                if divisor.is_zero():
                    self.error("division by zero", slash)
                result = result.scale(1 / divisor.coefficient((0,) * self.num_vars))
            else:
                return result

    def factor(self) -> Polynomial:
        if self.accept("-"):
            return -self.factor()
        if self.accept("+"):
            return self.factor()
        base = self.atom()
        caret = self.accept("^")
        if caret is None:
            return base
        if self.tok.kind == "op" and self.tok.value == "-":
            self.error("negative exponent")
        if self.tok.kind != "int":
            self.error("expected a non-negative integer exponent")
        exponent = int(self.tok.value)
        self.i += 1
        return base ** exponent

    def atom(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return Polynomial.constant(Fraction(int(tok.value)), self.num_vars)
        if tok.kind == "var":
            index = int(tok.value[1:])
            if index >= self.num_vars:
                self.error(
                    f"variable {tok.value} out of range for {self.num_vars} variables")
            self.i += 1
            return Polynomial.variable(index, self.num_vars)
        if self.accept("("):
            inner = self.expr()
            if self.accept(")") is None:
                self.error("expected ')'")
            return inner
        if tok.kind == "end":
            self.error("unexpected end of expression")
        self.error(f"unexpected token {tok.value!r}")


def parse_polynomial(text: str, num_vars: int) -> Polynomial:
    """Parse ``text`` into a canonical :class:`Polynomial` in ``num_vars`` variables.

    >>> str(parse_polynomial("x0*x2 - x1^2", 3))
    '-x1^2 + x0*x2'
    """
    if num_vars < 1:
        raise ValueError("num_vars must be positive")
    return _Parser(text, num_vars).parse()
