"""Recursive-descent parser for polynomial expressions in z1, z2.

Grammar::

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := '-' unary | atom ('^' nat)?
    atom  := 'z1' | 'z2' | 'i' | nat ('/' nat)? | '(' expr ')'

There is no implicit multiplication. Spans are byte offsets into the
UTF-8 encoded source.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from polyleaf.algebra import GaussianRational, Polynomial, poly_pow
from polyleaf.errors import (
    DegreeLimitExceededError,
    ExprSyntaxError,
    NegativeExponentError,
    UnknownVariableError,
)

MAX_DEGREE = 10**6

Span = tuple[int, int]


@dataclass(frozen=True)
class Token:
    kind: str  # NAT, IDENT, EOF or the operator character itself
    text: str
    span: Span


@dataclass(frozen=True)
class Node:
    kind: str  # add, sub, mul, pow, neg, var, lit
    span: Span
    children: tuple[Node, ...] = ()
    value: object = None


@dataclass(frozen=True)
class ParsedExpr:
    ast: Node
    source: str = field(repr=False)

    def degree_bound(self) -> int:
        return _degree_bound(self.ast)

    def to_polynomial(self) -> Polynomial:
        return _expand(self.ast)


def tokenize(text: str) -> list[Token]:
    # byte offset of every character position
    offsets = [0]
    for ch in text:
        offsets.append(offsets[-1] + len(ch.encode("utf-8")))
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        start = pos
        if ch.isdigit():
            while pos < n and text[pos].isdigit():
                pos += 1
            tokens.append(Token("NAT", text[start:pos], (offsets[start], offsets[pos])))
        elif ch.isalpha() or ch == "_":
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            tokens.append(Token("IDENT", text[start:pos], (offsets[start], offsets[pos])))
        elif ch in "+-*^/()":
            pos += 1
            tokens.append(Token(ch, ch, (offsets[start], offsets[pos])))
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", (offsets[start], offsets[start + 1]))
    tokens.append(Token("EOF", "", (offsets[n], offsets[n])))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            raise ExprSyntaxError(f"expected {what}, found {self._describe(self.tok)}", self.tok.span)
        return self.take()

    @staticmethod
    def _describe(t: Token) -> str:
        return "end of input" if t.kind == "EOF" else repr(t.text)

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "EOF":
            raise ExprSyntaxError(f"unexpected {self._describe(self.tok)}", self.tok.span)
        return node

    def expr(self) -> Node:
        left = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.take()
            right = self.term()
            left = Node("add" if op.kind == "+" else "sub", (left.span[0], right.span[1]), (left, right))
        return left

    def term(self) -> Node:
        left = self.unary()
        while self.tok.kind == "*":
            self.take()
            right = self.unary()
            left = Node("mul", (left.span[0], right.span[1]), (left, right))
        return left

    def unary(self) -> Node:
        if self.tok.kind == "-":
            minus = self.take()
            inner = self.unary()
            return Node("neg", (minus.span[0], inner.span[1]), (inner,))
        base = self.atom()
        if self.tok.kind != "^":
            return base
        self.take()
        k, end = self.exponent()
        return Node("pow", (base.span[0], end), (base,), k)

    def exponent(self) -> tuple[int, int]:
        t = self.tok
        if t.kind == "NAT":
            self.take()
            k = int(t.text)
            if k > MAX_DEGREE:
                raise DegreeLimitExceededError(f"exponent {k} exceeds {MAX_DEGREE}", t.span)
            return k, t.span[1]
        if t.kind == "-" and self.peek().kind == "NAT":
            raise NegativeExponentError("exponents must be nonnegative", (t.span[0], self.peek().span[1]))
        if t.kind == "(" and self.peek().kind == "-" and self.peek(2).kind == "NAT":
            end = self.peek(3).span[1] if self.peek(3).kind == ")" else self.peek(2).span[1]
            raise NegativeExponentError("exponents must be nonnegative", (t.span[0], end))
        raise ExprSyntaxError(
            f"exponent must be a nonnegative integer literal, found {self._describe(t)}", t.span
        )

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "IDENT":
            self.take()
            if t.text in ("z1", "z2"):
                return Node("var", t.span, value=int(t.text[1]))
            if t.text == "i":
                return Node("lit", t.span, value=GaussianRational(0, 1))
            raise UnknownVariableError(f"unknown variable {t.text!r}", t.span)
        if t.kind == "NAT":
            self.take()
            if self.tok.kind == "/":
                self.take()
                den = self.expect("NAT", "a denominator")
                if int(den.text) == 0:
                    raise ExprSyntaxError("zero denominator", den.span)
                return Node("lit", (t.span[0], den.span[1]), value=GaussianRational(Fraction(int(t.text), int(den.text))))
            return Node("lit", t.span, value=GaussianRational(int(t.text)))
        if t.kind == "(":
            self.take()
            inner = self.expr()
            close = self.expect(")", "')'")
            return Node(inner.kind, (t.span[0], close.span[1]), inner.children, inner.value)
        raise ExprSyntaxError(f"unexpected {self._describe(t)}", t.span)


def _degree_bound(node: Node) -> int:
    k = node.kind
    if k == "var":
        return 1
    if k == "lit":
        return 0
    if k == "neg":
        return _degree_bound(node.children[0])
    if k == "pow":
        return node.value * _degree_bound(node.children[0])
    if k == "mul":
        return sum(_degree_bound(c) for c in node.children)
    return max(_degree_bound(c) for c in node.children)


def _expand(node: Node) -> Polynomial:
    k = node.kind
    if k == "var":
        return Polynomial.z1() if node.value == 1 else Polynomial.z2()
    if k == "lit":
        return Polynomial.constant(node.value)
    if k == "neg":
        return -_expand(node.children[0])
    if k == "pow":
        return poly_pow(_expand(node.children[0]), node.value)
    a, b = (_expand(c) for c in node.children)
    if k == "add":
        return a + b
    if k == "sub":
        return a - b
    return a * b


def parse_poly(text: str) -> ParsedExpr:
    """Parse ``text``; raises a ParseError subclass carrying the byte span."""
    ast = _Parser(text).parse()
    parsed = ParsedExpr(ast, text)
    if parsed.degree_bound() > MAX_DEGREE:
        raise DegreeLimitExceededError(f"degree exceeds {MAX_DEGREE}", ast.span)
    return parsed


def parse_polynomial(text: str) -> Polynomial:
    return parse_poly(text).to_polynomial()
