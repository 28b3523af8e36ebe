"""Recursive-descent parser for the small expression grammar.

Grammar (``^`` binds tighter than ``*``/``/``, which bind tighter than
``+``/``-``; unary minus allowed)::

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := ('-' | '+') unary | power
    power    := atom ('^' exponent)?
    exponent := INT | '-' INT | '(' '-'? INT ')'
    atom     := INT | NAME | '(' expr ')'

The parser is value-agnostic: names are resolved through a mapping and
integer literals through a ``scalar`` callback, and the resulting objects
are combined with the ordinary Python operators.  The same routine
therefore parses coefficients, PBW elements and Laurent elements.
"""

from __future__ import annotations

import re
from typing import Any, Callable, Mapping

from .errors import ParseError, SkewPBWError

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.)")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), pos))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), pos))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", pos)
            tokens.append(("op", ch, pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, symbols, scalar):
        self.tokens = tokenize(text)
        self.i = 0
        self.symbols = symbols
        self.scalar = scalar

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] not in ("op",):
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def _apply(self, fn, pos):
        try:
            return fn()
        except ParseError:
            raise
        except (SkewPBWError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), pos) from exc

    def expr(self):
        left = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op, pos = self.take()[1:]
            right = self.term()
            if op == "+":
                left = self._apply(lambda: left + right, pos)
            else:
                left = self._apply(lambda: left - right, pos)
        return left

    def term(self):
        left = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op, pos = self.take()[1:]
            right = self.unary()
            if op == "*":
                left = self._apply(lambda: left * right, pos)
            else:
                left = self._apply(lambda: left / right, pos)
        return left

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            operand = self.unary()
            return self._apply(lambda: -operand, tok[2]) if tok[1] == "-" else operand
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            k = self.exponent()
            return self._apply(lambda: base ** k, tok[2])
        return base

    def exponent(self):
        tok = self.take()
        paren = False
        if tok[0] == "op" and tok[1] == "(":
            paren = True
            tok = self.take()
        sign = 1
        if tok[0] == "op" and tok[1] == "-":
            sign = -1
            tok = self.take()
        if tok[0] != "int":
            raise ParseError("expected integer exponent", tok[2])
        if paren:
            self.expect(")")
        return sign * int(tok[1])

    def atom(self):
        tok = self.take()
        kind, value, pos = tok
        if kind == "int":
            return self.scalar(int(value))
        if kind == "name":
            if value not in self.symbols:
                raise ParseError(f"unknown symbol {value!r}", pos)
            return self.symbols[value]
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)


def parse_expression(text: str, symbols: Mapping[str, Any], scalar: Callable[[int], Any]) -> Any:
    """Parse ``text`` into a value built from ``symbols`` and ``scalar``."""
    parser = _Parser(text, symbols, scalar)
    if parser.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    value = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])
    return value


def split_top_level(text: str, sep: str, *, last: bool = False, spaced: bool = False) -> tuple[str, str] | None:
    """Split ``text`` at a separator character outside parentheses.

    With ``spaced`` the separator only counts when surrounded by
    whitespace, which keeps ``1/2`` intact inside ``a / s``.
    """
    depth = 0
    hits = []
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            if spaced and not (0 < i < len(text) - 1 and text[i - 1].isspace() and text[i + 1].isspace()):
                continue
            hits.append(i)
    if not hits:
        return None
    i = hits[-1] if last else hits[0]
    return text[:i].strip(), text[i + 1:].strip()
