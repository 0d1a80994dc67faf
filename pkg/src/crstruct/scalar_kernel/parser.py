"""Recursive-descent reader for the ASCII expression grammar.

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' integer)? | '-' factor | '(' expr ')' ('^' integer)?
    atom   := identifier | identifier '(' expr ')' | 'I' | rational

``conj(...)`` is built in.  Other call forms and the meaning of bare
identifiers are supplied by hooks, so the same reader serves the frame
calculus (``L(conj(a))``, frame names) and map files (``z'``).
"""

from __future__ import annotations

import re
from typing import Callable, Mapping

from .errors import ExpressionSyntaxError
from .fraction import UnitFraction
from .gaussrat import GaussRat
from .poly import StarPoly
from .symbols import Symbol

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*'*)|(?P<op>[-+*/^(),]))"
)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    """Return ``(kind, value, column)`` triples ending with an ``end`` token."""
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", text, pos + 1)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class Parser:
    def __init__(
        self,
        text: str,
        make_symbol: Callable[[str], object],
        make_const: Callable[[GaussRat], object],
        call: Callable[[str, object], object] | None = None,
    ):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.make_symbol = make_symbol
        self.make_const = make_const
        self.call = call

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ExpressionSyntaxError(message, self.text, tok[2])

    def expect(self, value: str):
        tok = self.peek()
        if tok[0] != "op" or tok[1] != value:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            self.fail(f"expected {value!r}, found {what}")
        return self.advance()

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok[0] == "op" and tok[1] == value

    def parse(self):
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.at("*") or self.at("/"):
            op = self.advance()
            rhs = self.factor()
            if op[1] == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except ZeroDivisionError:
                    raise ExpressionSyntaxError("division by zero", self.text, op[2]) from None
        return value

    def factor(self):
        if self.at("-"):
            self.advance()
            return -self.factor()
        if self.at("("):
            self.advance()
            value = self.expr()
            self.expect(")")
        else:
            value = self.atom()
        if self.at("^"):
            self.advance()
            sign = 1
            if self.at("-"):
                self.advance()
                sign = -1
            tok = self.peek()
            if tok[0] != "num":
                self.fail("expected integer exponent")
            self.advance()
            value = value ** (sign * int(tok[1]))
        return value

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.advance()
            return self.make_const(GaussRat(int(tok[1])))
        if tok[0] == "name":
            self.advance()
            name = tok[1]
            if self.at("("):
                self.advance()
                arg = self.expr()
                self.expect(")")
                if name == "conj":
                    return arg.conj()
                if self.call is None:
                    self.fail(f"unknown function {name!r}", tok)
                try:
                    return self.call(name, arg)
                except KeyError:
                    self.fail(f"unknown function {name!r}", tok)
            if name == "I":
                return self.make_const(GaussRat(0, 1))
            if name == "conj":
                self.fail("expected '('")
            try:
                return self.make_symbol(name)
            except KeyError:
                self.fail(f"unknown identifier {name!r}", tok)
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        self.fail(f"unexpected {what}")


def symbol_table(units=(), reals=(), symbols: Mapping[str, Symbol] | None = None):
    table = dict(symbols or {})

    def make(name: str) -> UnitFraction:
        sym = table.get(name)
        if sym is None:
            sym = Symbol(name, unit=name in units, real=name in reals)
            table[name] = sym
        return UnitFraction(StarPoly.symbol(sym))

    return make


def parse_expr(text: str, units=(), reals=(), symbols: Mapping[str, Symbol] | None = None) -> UnitFraction:
    """Parse ``text`` into a canonical :class:`UnitFraction`.

    ``units`` and ``reals`` name the identifiers carrying those flags;
    ``symbols`` maps names to prebuilt symbols (e.g. derived units).
    """
    make = symbol_table(units, reals, symbols)
    return Parser(text, make, lambda c: UnitFraction(StarPoly.constant(c))).parse()
