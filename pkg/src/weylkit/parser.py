"""Recursive-descent parser for Weyl algebra expressions.

Grammar (whitespace insignificant, multiplication always explicit):

    expr     := ('+' | '-')? term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' uint)?
    atom     := 'p' | 'q' | 'h' | rational | '(' expr ')'
    rational := uint ('/' uint)?

Products keep their source order; "q*p" only becomes p*q - 1 when the
tree is evaluated into a normal-ordered element.  The atom h stands for
the product p*q.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .element import WeylElement, H, P, Q, mul, power


class ExprSyntaxError(ValueError):
    """Parse failure; `position` is the byte offset of the offending text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"syntax error at byte {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str  # 'p', 'q' or 'h'


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int


@dataclass(frozen=True)
class Prod:
    factors: tuple["ExprAst", ...]


@dataclass(frozen=True)
class Neg:
    child: "ExprAst"


@dataclass(frozen=True)
class Sum:
    parts: tuple["ExprAst", ...]


ExprAst = Num | Var | Pow | Prod | Neg | Sum

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([pqh])|([-+*^()]))")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []  # (kind, value, offset)
        pos = 0
        while pos < len(text):
            if not text[pos:].strip():
                break
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ExprSyntaxError(f"unexpected character {text[bad]!r}", bad)
            offset = m.start(m.lastindex)
            if m.group(1) is not None:
                self.items.append(("number", m.group(1), offset))
            elif m.group(2) is not None:
                self.items.append(("name", m.group(2), offset))
            else:
                self.items.append(("op", m.group(3), offset))
            pos = m.end()
        self.index = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.items[self.index] if self.index < len(self.items) else None

    def next(self) -> tuple[str, str, int] | None:
        tok = self.peek()
        if tok is not None:
            self.index += 1
        return tok

    def end_offset(self) -> int:
        return len(self.text)


def parse_expr(text: str) -> ExprAst:
    if not text.strip():
        raise ExprSyntaxError("empty expression", 0)
    tokens = _Tokens(text)
    ast = _parse_sum(tokens)
    trailing = tokens.peek()
    if trailing is not None:
        raise ExprSyntaxError(f"unexpected {trailing[1]!r}", trailing[2])
    return ast


def _parse_sum(tokens: _Tokens) -> ExprAst:
    parts: list[ExprAst] = []
    tok = tokens.peek()
    lead_negative = False
    if tok is not None and tok[0] == "op" and tok[1] in "+-":
        tokens.next()
        lead_negative = tok[1] == "-"
    term = _parse_term(tokens)
    parts.append(Neg(term) if lead_negative else term)
    while True:
        tok = tokens.peek()
        if tok is None or tok[0] != "op" or tok[1] not in "+-":
            break
        tokens.next()
        term = _parse_term(tokens)
        parts.append(Neg(term) if tok[1] == "-" else term)
    return parts[0] if len(parts) == 1 else Sum(tuple(parts))


def _parse_term(tokens: _Tokens) -> ExprAst:
    factors = [_parse_factor(tokens)]
    while True:
        tok = tokens.peek()
        if tok is None or tok[0] != "op" or tok[1] != "*":
            break
        tokens.next()
        factors.append(_parse_factor(tokens))
    return factors[0] if len(factors) == 1 else Prod(tuple(factors))


def _parse_factor(tokens: _Tokens) -> ExprAst:
    base = _parse_atom(tokens)
    tok = tokens.peek()
    if tok is not None and tok[0] == "op" and tok[1] == "^":
        tokens.next()
        exp_tok = tokens.next()
        if exp_tok is None:
            raise ExprSyntaxError("expected an exponent", tokens.end_offset())
        kind, value, offset = exp_tok
        if kind != "number" or "/" in value:
            raise ExprSyntaxError("exponent must be a nonnegative integer", offset)
        return Pow(base, int(value))
    return base


def _parse_atom(tokens: _Tokens) -> ExprAst:
    tok = tokens.next()
    if tok is None:
        raise ExprSyntaxError("unexpected end of input", tokens.end_offset())
    kind, value, offset = tok
    if kind == "number":
        if "/" in value:
            num, den = value.split("/")
            if int(den) == 0:
                raise ExprSyntaxError("zero denominator", offset)
            return Num(Fraction(int(num), int(den)))
        return Num(Fraction(int(value)))
    if kind == "name":
        return Var(value)
    if kind == "op" and value == "(":
        inner = _parse_sum(tokens)
        closing = tokens.next()
        if closing is None or closing[1] != ")":
            raise ExprSyntaxError("expected ')'", closing[2] if closing else tokens.end_offset())
        return inner
    raise ExprSyntaxError(f"unexpected {value!r}", offset)


def eval_ast(ast: ExprAst) -> WeylElement:
    """Fold the tree into a normal-ordered element."""
    if isinstance(ast, Num):
        return WeylElement.monomial(0, 0, ast.value)
    if isinstance(ast, Var):
        return {"p": P, "q": Q, "h": H}[ast.name]
    if isinstance(ast, Pow):
        return power(eval_ast(ast.base), ast.exponent)
    if isinstance(ast, Prod):
        out = WeylElement.one()
        for factor in ast.factors:
            out = mul(out, eval_ast(factor))
        return out
    if isinstance(ast, Neg):
        return -eval_ast(ast.child)
    if isinstance(ast, Sum):
        out = WeylElement.zero()
        for part in ast.parts:
            out = out + eval_ast(part)
        return out
    raise TypeError(f"not an expression node: {ast!r}")


def element_from_string(text: str) -> WeylElement:
    """Parse and evaluate in one step."""
    return eval_ast(parse_expr(text))
