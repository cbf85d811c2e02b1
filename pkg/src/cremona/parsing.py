"""Recursive-descent parser for rationals, polynomials, rational functions and words.

Rational-function grammar (variable ``X`` by default)::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := '-' factor | primary ('^' int)?
    primary := integer | var | '(' expr ')'

Polynomials and rationals are the same grammar with the result checked.
``3/2*X^2 - X + 1`` parses as ``(3/2)*X^2 - X + 1``.

Word grammar, with rational-function arguments::

    wexpr   := wfactor ('*' wfactor)*
    wfactor := watom ('^' int)?
    watom   := 's(' rat ')' | 'a(' ratfunc ')' | 'm(' ratfunc ')'
             | '[' wexpr ',' wexpr ']' | '(' wexpr ')' | '1'

Each distinct generator literal is bound under its canonical text, e.g.
``a(X^2)``, so printing a word yields parseable input again.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .arith import Poly, Rat, RatFunc, X as POLY_X
from .jonquieres import JonqElement, alpha, mu, s
from .words import Word, commutator


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.message = message
        self.text = text
        self.pos = pos

    def annotated(self) -> str:
        return f"{self}\n  {self.text}\n  {' ' * self.pos}^"


class _Parser:
    def __init__(self, text: str, var: str = "X"):
        self.text = text
        self.pos = 0
        self.var = var
        self.env: Dict[str, JonqElement] = {}

    # -- lexing helpers --------------------------------------------------

    def error(self, message: str, pos=None):
        return ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.accept(ch):
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.peek() or "end of input"
            raise self.error(f"expected integer, found {found!r}")
        return int(self.text[start : self.pos])

    def signed_integer(self) -> int:
        sign = -1 if self.accept("-") else 1
        return sign * self.integer()

    def finish(self):
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")

    # -- rational functions ------------------------------------------------

    def expr(self) -> RatFunc:
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> RatFunc:
        acc = self.factor()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            at = self.pos
            self.pos += 1
            rhs = self.factor()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero():
                    raise self.error("division by zero rational function", at)
                acc = acc / rhs
        return acc

    def factor(self) -> RatFunc:
        if self.accept("-"):
            return -self.factor()
        base = self.primary()
        if self.peek() == "^":
            at = self.pos
            self.pos += 1
            k = self.signed_integer()
            if k < 0 and base.is_zero():
                raise self.error("division by zero rational function", at)
            base = base**k
        return base

    def primary(self) -> RatFunc:
        ch = self.peek()
        if ch.isdigit():
            return RatFunc(Poly((self.integer(),)))
        if self.text.startswith(self.var, self.pos):
            self.pos += len(self.var)
            return RatFunc(POLY_X)
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        raise self.error(f"unexpected {ch or 'end of input'!r}")

    # -- words --------------------------------------------------------------

    def wexpr(self) -> Word:
        acc = self.wfactor()
        while self.accept("*"):
            acc = acc * self.wfactor()
        return acc

    def wfactor(self) -> Word:
        base = self.watom()
        if self.accept("^"):
            k = self.signed_integer()
            base = base**k
        return base

    def watom(self) -> Word:
        ch = self.peek()
        start = self.pos
        if ch in ("s", "a", "m") and self.text[self.pos + 1 : self.pos + 2] == "(":
            self.pos += 1
            self.expect("(")
            arg_pos = self.pos
            value = self.expr()
            self.expect(")")
            return self._bind(ch, value, arg_pos)
        if self.accept("["):
            u = self.wexpr()
            self.expect(",")
            v = self.wexpr()
            self.expect("]")
            return commutator(u, v)
        if self.accept("("):
            w = self.wexpr()
            self.expect(")")
            return w
        if self.accept("1"):
            return Word()
        raise self.error(f"expected generator, found {ch or 'end of input'!r}", start)

    def _bind(self, kind: str, value: RatFunc, pos: int) -> Word:
        if kind == "s":
            if not value.is_constant():
                raise self.error("translation amount must be a rational", pos)
            t = value.constant_value()
            gen_id, elem = f"s({t})", s(t)
        elif kind == "a":
            gen_id, elem = f"a({value})", alpha(value)
        else:
            if value.is_zero():
                raise self.error("multiplier must be nonzero", pos)
            gen_id, elem = f"m({value})", mu(value)
        self.env[gen_id] = elem
        return Word.gen(gen_id)


def parse_ratfunc(text: str, var: str = "X") -> RatFunc:
    p = _Parser(text, var)
    value = p.expr()
    p.finish()
    return value


def parse_poly(text: str, var: str = "X") -> Poly:
    value = parse_ratfunc(text, var)
    if not value.is_polynomial():
        raise ParseError("expected a polynomial", text, 0)
    return value.num


def parse_rat(text: str) -> Rat:
    value = parse_ratfunc(text)
    if not value.is_constant():
        raise ParseError("expected a rational number", text, 0)
    return value.constant_value()


def parse_word(text: str) -> Tuple[Word, Dict[str, JonqElement]]:
    """Parse a word expression; returns the word and its generator bindings."""
    p = _Parser(text)
    w = p.wexpr()
    p.finish()
    return w, p.env
