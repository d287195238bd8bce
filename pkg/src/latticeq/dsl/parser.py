"""Recursive-descent parser for predicate expressions.

Grammar, loosest binding first::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' int] | '-' factor
    atom   := number | 'pi' | 'i' | 'n' | ident | '(' expr ')' | 'exp' '(' expr ')'
    int    := digits | '(' ['-'] digits ')'
    ident  := 'k' | 'x' | 'p' digits

Binary operators associate to the left; ``-k^2`` is ``-(k^2)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from latticeq.dsl.ast import FUNCTIONS, SYMBOLS, BinOp, Call, Expr, Neg, Num, Pow, Sym, Var, is_variable
from latticeq.errors import DSLSyntaxError

MAX_SOURCE_BYTES = 64 * 1024
MAX_DEPTH = 100
MAX_TREE_HEIGHT = 200

_OPERATORS = "+-*/^()"
_DIGITS = frozenset("0123456789")

Node = tuple[Expr, int]


def _is_digits(text: str) -> bool:
    return bool(text) and all(ch in _DIGITS for ch in text)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op", "end"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            line, col = line + 1, 1
            pos += 1
            continue
        if ch.isspace():
            pos += 1
            col += 1
            continue
        start_col = col
        if ch in _DIGITS or (ch == "." and pos + 1 < len(text) and text[pos + 1] in _DIGITS):
            end = pos
            while end < len(text) and text[end] in _DIGITS:
                end += 1
            if end < len(text) and text[end] == ".":
                end += 1
                while end < len(text) and text[end] in _DIGITS:
                    end += 1
            tokens.append(Token("num", text[pos:end], line, start_col))
        elif (ch.isascii() and ch.isalpha()) or ch == "_":
            end = pos
            while end < len(text) and text[end].isascii() and (text[end].isalnum() or text[end] == "_"):
                end += 1
            tokens.append(Token("ident", text[pos:end], line, start_col))
        elif ch in _OPERATORS:
            end = pos + 1
            tokens.append(Token("op", ch, line, start_col))
        else:
            raise DSLSyntaxError(f"unexpected character {ch!r}", line, start_col)
        col += end - pos
        pos = end
    tokens.append(Token("end", "", line, col))
    return tokens


class Parser:
    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.pos = 0
        self.depth = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _error(self, message: str, token: Optional[Token] = None) -> DSLSyntaxError:
        token = token or self.current
        return DSLSyntaxError(message, token.line, token.col)

    def _advance(self) -> Token:
        token = self.current
        self.pos += 1
        return token

    def _accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.pos += 1
            return True
        return False

    def _expect(self, op: str) -> None:
        if not self._accept(op):
            found = self.current.text or "end of input"
            raise self._error(f"expected '{op}', found '{found}'")

    def parse(self) -> Expr:
        expr, _ = self._expr()
        if self.current.kind != "end":
            raise self._error(f"unexpected '{self.current.text}'")
        return expr

    def _grow(self, node: Expr, *heights: int) -> Node:
        height = 1 + max(heights)
        if height > MAX_TREE_HEIGHT:
            raise self._error(f"expression tree deeper than {MAX_TREE_HEIGHT} levels")
        return node, height

    def _expr(self) -> Node:
        left, height = self._term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self._advance().text
            right, right_height = self._term()
            left, height = self._grow(BinOp(op, left, right), height, right_height)
        return left, height

    def _term(self) -> Node:
        left, height = self._factor()
        while self.current.kind == "op" and self.current.text in "*/":
            op = self._advance().text
            right, right_height = self._factor()
            left, height = self._grow(BinOp(op, left, right), height, right_height)
        return left, height

    def _factor(self) -> Node:
        if self._accept("-"):
            operand, height = self._nested(self._factor)
            return self._grow(Neg(operand), height)
        base, height = self._atom()
        if self._accept("^"):
            return self._grow(Pow(base, self._exponent()), height)
        return base, height

    def _exponent(self) -> int:
        start = self.current
        if start.kind == "num":
            return self._integer(self._advance())
        if self._accept("("):
            sign = -1 if self._accept("-") else 1
            if self.current.kind != "num":
                raise self._error("non-integer exponent", start)
            value = sign * self._integer(self._advance())
            if not self._accept(")"):
                raise self._error("non-integer exponent", start)
            return value
        raise self._error("non-integer exponent", start)

    def _integer(self, token: Token) -> int:
        if not _is_digits(token.text):
            raise self._error("non-integer exponent", token)
        return int(token.text)

    def _atom(self) -> Node:
        token = self.current
        if token.kind == "num":
            self._advance()
            return Num(Fraction(token.text)), 1
        if token.kind == "ident":
            self._advance()
            name = token.text
            if name in FUNCTIONS:
                self._expect("(")
                arg, height = self._nested(self._expr)
                self._expect(")")
                return self._grow(Call(name, arg), height)
            if name in SYMBOLS:
                return Sym(name), 1
            if is_variable(name):
                return Var(name), 1
            raise self._error(f"unknown identifier '{name}'", token)
        if self._accept("("):
            inner = self._nested(self._expr)
            self._expect(")")
            return inner
        found = token.text or "end of input"
        raise self._error(f"expected a number, symbol or '(', found '{found}'")

    def _nested(self, rule: Callable[[], Node]) -> Node:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise self._error(f"expression nested deeper than {MAX_DEPTH} levels")
        try:
            return rule()
        finally:
            self.depth -= 1


def parse(text: str) -> Expr:
    """Parse predicate text into an expression tree."""
    if len(text.encode("utf-8")) > MAX_SOURCE_BYTES:
        raise DSLSyntaxError(f"expression exceeds {MAX_SOURCE_BYTES} bytes", 1, 1)
    return Parser(text).parse()
