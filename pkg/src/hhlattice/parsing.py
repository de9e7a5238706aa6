"""Round-trip parser for the canonical polynomial text rendering.

The grammar covers what the renderer emits plus ordinary parenthesized
arithmetic: explicit ``*`` products, ``^`` powers with possibly negative
integer exponents, and a top-level ``/`` for rational functions.
"""

from __future__ import annotations

import re
from typing import List, Tuple, Union

from .algebra import (LaurentPolynomial, RationalFunction, divide_values,
                      simplify_value, variable_from_name)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\^|\*|/|\+|-|\(|\)))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            remainder = text[pos:].strip()
            if not remainder:
                break
            raise ParseError("cannot tokenize %r" % remainder[:20])
        if m.group(1):
            tokens.append(("int", m.group(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind=None, text=None):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of input")
        if kind and tok[0] != kind:
            raise ParseError("expected %s, got %r" % (kind, tok[1]))
        if text and tok[1] != text:
            raise ParseError("expected %r, got %r" % (text, tok[1]))
        self.pos += 1
        return tok

    def parse_sum(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            value = -self.parse_product()
        else:
            value = self.parse_product()
        while True:
            tok = self.peek()
            if tok == ("op", "+"):
                self.take()
                value = value + self.parse_product()
            elif tok == ("op", "-"):
                self.take()
                value = value - self.parse_product()
            else:
                return value

    def parse_product(self):
        value = self.parse_atom()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                value = value * self.parse_atom()
            elif tok == ("op", "/"):
                self.take()
                value = divide_values(value, self.parse_atom())
            else:
                return value

    def parse_atom(self):
        kind, text = self.peek()
        if kind == "int":
            self.take()
            return LaurentPolynomial.constant(int(text))
        if kind == "name":
            self.take()
            var = variable_from_name(text)
            exp = 1
            if self.peek() == ("op", "^"):
                self.take()
                sign = 1
                if self.peek() == ("op", "-"):
                    self.take()
                    sign = -1
                exp = sign * int(self.take("int")[1])
            return LaurentPolynomial.variable(var, exp)
        if (kind, text) == ("op", "("):
            self.take()
            value = self.parse_sum()
            self.take("op", ")")
            return value
        raise ParseError("unexpected token %r" % (text,))


def parse_value(text: str) -> Union[LaurentPolynomial, RationalFunction]:
    """Parse a polynomial or rational function from its text rendering."""
    parser = _Parser(_tokenize(text))
    value = parser.parse_sum()
    if parser.pos != len(parser.tokens):
        raise ParseError("trailing input at token %d" % parser.pos)
    return simplify_value(value)


def parse_polynomial(text: str) -> LaurentPolynomial:
    value = parse_value(text)
    if isinstance(value, RationalFunction):
        raise ParseError("expected a Laurent polynomial, got a quotient")
    return value
