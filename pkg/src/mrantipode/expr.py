"""Evaluate shuffle expressions written the way they are printed by hand.

Grammar (concatenation binds tighter than shuffle, shuffle tighter than +/-)::

    expr    := [sign] shuffle (sign shuffle)*
    shuffle := concat ("⧢" concat)*
    concat  := atom+
    atom    := digits | "e" | "(" expr ")"

A run of digits is a word with one letter per digit, ``0`` alone is the zero
element and ``e`` (or ``∅``) is the empty word.  ``-``, ``−`` and ``+`` are
accepted as signs; ``sha`` is an ASCII spelling of ``⧢``.
"""

from __future__ import annotations

import re

from .algebra import Element, concat, shuffle
from .words import WordError

_TOKEN = re.compile(r"\s*(?:(?P<digits>\d+)|(?P<op>[()+\-−⧢∅e])|(?P<sha>sha))")


class ExpressionError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        if m.group("digits") is not None:
            tokens.append(m.group("digits"))
        elif m.group("sha"):
            tokens.append("⧢")
        else:
            op = m.group("op")
            tokens.append({"−": "-", "∅": "e"}.get(op, op))
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ExpressionError(f"expected {expected or 'a token'}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self) -> Element:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        result = self.shuffle() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            result = result + self.shuffle() * sign
        return result

    def shuffle(self) -> Element:
        result = self.concat()
        while self.peek() == "⧢":
            self.take()
            result = shuffle(result, self.concat())
        return result

    def concat(self) -> Element:
        factors = [self.atom()]
        while self.peek() is not None and (self.peek().isdigit() or self.peek() in ("(", "e")):
            factors.append(self.atom())
        return concat(*factors)

    def atom(self) -> Element:
        tok = self.take()
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if tok == "e":
            return Element.one()
        if tok.isdigit():
            if "0" in tok:
                # a word containing the letter 0 is the zero element
                return Element.zero()
            return Element.word(int(c) for c in tok)
        raise ExpressionError(f"unexpected token {tok!r}")


def evaluate(text: str) -> Element:
    """Expand an expression such as ``"(1⧢2-21)⧢4+1⧢42"`` into an Element."""
    tokens = _tokenize(text)
    if not tokens:
        raise ExpressionError("empty expression")
    parser = _Parser(tokens)
    try:
        result = parser.expr()
    except WordError as exc:
        raise ExpressionError(str(exc)) from exc
    if parser.peek() is not None:
        raise ExpressionError(f"trailing input at token {parser.peek()!r} in {text!r}")
    return result
