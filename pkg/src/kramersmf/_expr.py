"""Tiny closed-form expression grammar for single-site potentials.

Supported syntax: the variable ``z``, numeric literals, ``+ - * /`` (division
only by constant subexpressions), integer powers via ``^`` or ``**``,
``exp(...)`` and parentheses.  Expressions are parsed into a small AST with
exact symbolic differentiation, which is what keeps derivatives up to fourth
order free of finite-difference noise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np


class ExprError(ValueError):
    """Raised when an expression does not conform to the grammar."""


# ---------------------------------------------------------------------------
# AST nodes


class Node:
    def eval(self, z):
        raise NotImplementedError

    def diff(self) -> "Node":
        raise NotImplementedError

    def is_constant(self) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Const(Node):
    value: float

    def eval(self, z):
        return np.broadcast_to(np.float64(self.value), np.shape(z)).copy() if np.ndim(z) else float(self.value)

    def diff(self):
        return Const(0.0)

    def is_constant(self):
        return True


@dataclass(frozen=True)
class Var(Node):
    def eval(self, z):
        return np.asarray(z, dtype=float) if np.ndim(z) else float(z)

    def diff(self):
        return Const(1.0)

    def is_constant(self):
        return False


@dataclass(frozen=True)
class Add(Node):
    a: Node
    b: Node

    def eval(self, z):
        return self.a.eval(z) + self.b.eval(z)

    def diff(self):
        return _add(self.a.diff(), self.b.diff())

    def is_constant(self):
        return self.a.is_constant() and self.b.is_constant()


@dataclass(frozen=True)
class Mul(Node):
    a: Node
    b: Node

    def eval(self, z):
        return self.a.eval(z) * self.b.eval(z)

    def diff(self):
        return _add(_mul(self.a.diff(), self.b), _mul(self.a, self.b.diff()))

    def is_constant(self):
        return self.a.is_constant() and self.b.is_constant()


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int

    def eval(self, z):
        return self.base.eval(z) ** self.exponent

    def diff(self):
        n = self.exponent
        if n == 0:
            return Const(0.0)
        inner = self.base.diff()
        return _mul(_mul(Const(float(n)), Pow(self.base, n - 1) if n != 1 else Const(1.0)), inner)

    def is_constant(self):
        return self.base.is_constant()


@dataclass(frozen=True)
class Exp(Node):
    arg: Node

    def eval(self, z):
        return np.exp(self.arg.eval(z))

    def diff(self):
        return _mul(self, self.arg.diff())

    def is_constant(self):
        return self.arg.is_constant()


def _const_value(node: Node):
    if isinstance(node, Const):
        return node.value
    if node.is_constant():
        return float(node.eval(0.0))
    return None


def _add(a: Node, b: Node) -> Node:
    va, vb = _const_value(a), _const_value(b)
    if va is not None and vb is not None:
        return Const(va + vb)
    if va == 0.0:
        return b
    if vb == 0.0:
        return a
    return Add(a, b)


def _mul(a: Node, b: Node) -> Node:
    va, vb = _const_value(a), _const_value(b)
    if va is not None and vb is not None:
        return Const(va * vb)
    if va == 0.0 or vb == 0.0:
        return Const(0.0)
    if va == 1.0:
        return b
    if vb == 1.0:
        return a
    return Mul(a, b)


# ---------------------------------------------------------------------------
# Parser (recursive descent)

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_]+)"
    r"|(?P<op>\*\*|\^|[+\-*/()])"
    r")"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ExprError(f"unexpected character at position {pos}: {text[pos:]!r}")
        pos = m.end()
        if m.group("num") is not None:
            tokens.append(("num", float(m.group("num"))))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name")))
        else:
            op = m.group("op")
            tokens.append(("pow" if op in ("**", "^") else op, op))
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ExprError(f"expected {kind!r}, got {tok[1]!r}")
        return tok

    def parse(self) -> Node:
        node = self.expr()
        if self.peek() != "end":
            raise ExprError(f"trailing input: {self.tokens[self.i][1]!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            node = _add(node, rhs if op == "+" else _mul(Const(-1.0), rhs))
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek() in ("*", "/"):
            op = self.next()[0]
            rhs = self.unary()
            if op == "*":
                node = _mul(node, rhs)
            else:
                divisor = _const_value(rhs)
                if divisor is None:
                    raise ExprError("division is only allowed by constants")
                if divisor == 0.0:
                    raise ExprError("division by zero")
                node = _mul(node, Const(1.0 / divisor))
        return node

    def unary(self) -> Node:
        if self.peek() == "-":
            self.next()
            return _mul(Const(-1.0), self.unary())
        if self.peek() == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek() == "pow":
            self.next()
            neg = False
            if self.peek() == "-":
                self.next()
                neg = True
            tok = self.expect("num")
            exponent = tok[1]
            if exponent != int(exponent):
                raise ExprError("only integer exponents are supported")
            exponent = int(exponent)
            if neg:
                raise ExprError("negative exponents are not supported")
            return Pow(base, exponent) if not base.is_constant() else Const(float(base.eval(0.0)) ** exponent)
        return base

    def atom(self) -> Node:
        kind, value = self.next()
        if kind == "num":
            return Const(value)
        if kind == "name":
            if value == "z":
                return Var()
            if value == "exp":
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Exp(arg)
            raise ExprError(f"unknown symbol {value!r} (only 'z' and 'exp' are allowed)")
        if kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ExprError(f"unexpected token {value!r}")


def parse_expression(text: str) -> Node:
    """Parse ``text`` into an AST; raises :class:`ExprError` on bad input."""
    return _Parser(_tokenize(text)).parse()


def derivative_table(text: str, max_order: int = 4):
    """Return callables for the expression and its derivatives 0..max_order."""
    node = parse_expression(text)
    table = [node]
    for _ in range(max_order):
        table.append(table[-1].diff())
    return [n.eval for n in table]
