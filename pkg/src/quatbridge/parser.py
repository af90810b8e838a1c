"""Concrete syntax for operators.

Grammar (``j`` is the complex imaginary unit)::

    expr    := term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := "-" factor | "D" | "d1" | "d2" | "d3" | "R1" | "R2" | "R3"
             | "L" quat | "M" quat | complex | "(" expr ")"
    quat    := "[" complex "," complex "," complex "," complex "]"
    complex := number | number "j" | number ("+" | "-") number "j"

Numbers are decimals (optional exponent) or ``p/q`` rationals. ``L[q]``
multiplies from the left, ``M[q]`` from the right, and ``*`` composes
left to right, so ``A*B`` applies ``B`` first. ``L[[..]]`` is accepted as
an alias of ``L[..]``. A parenthesized complex literal such as ``(2-3j)``
is read as one scalar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import operators as ops
from .algebra import Quaternion, decompose_matrix
from .scalars import EXACT, format_complex, parse_complex, to_mode


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, src: str = ""):
        self.pos = pos
        self.src = src
        super().__init__(f"{message} at position {pos}")


# ---------------------------------------------------------------- AST

class Node:
    prec = 4


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node
    prec = 1


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node
    prec = 1


@dataclass(frozen=True)
class Mul(Node):
    left: Node
    right: Node
    prec = 2


@dataclass(frozen=True)
class Neg(Node):
    operand: Node
    prec = 3


@dataclass(frozen=True)
class Moisil(Node):
    pass


@dataclass(frozen=True)
class Deriv(Node):
    axis: int


@dataclass(frozen=True)
class Reflect(Node):
    axis: int


@dataclass(frozen=True)
class LeftMul(Node):
    q: Quaternion


@dataclass(frozen=True)
class RightMul(Node):
    q: Quaternion


@dataclass(frozen=True)
class Scalar(Node):
    value: object


# ---------------------------------------------------------------- lexer

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?j?"
_TOKEN_RE = re.compile(rf"\s*(?:(?P<num>{_NUM})|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[-+*()\[\],]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "punct", "end"
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    tokens, pos = [], 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            tokens.append(Token("end", "", pos))
            return tokens
        m = _TOKEN_RE.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {src[pos]!r}", pos, src)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()


# ---------------------------------------------------------------- parser

_ATOMS = {
    "D": Moisil(),
    "d1": Deriv(1), "d2": Deriv(2), "d3": Deriv(3),
    "R1": Reflect(1), "R2": Reflect(2), "R3": Reflect(3),
}


class _Parser:
    def __init__(self, src: str, mode: str):
        self.src = src
        self.mode = mode
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.text != text or tok.kind == "num":
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.pos, self.src)
        return tok

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.pos, self.src)

    def parse(self) -> Node:
        node = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind == "punct" and self.peek().text in "+-":
            op = self.next().text
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek().kind == "punct" and self.peek().text == "*":
            self.next()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Node:
        tok = self.peek()
        if tok.kind == "punct" and tok.text == "-":
            self.next()
            return Neg(self.factor())
        if tok.kind == "num":
            self.next()
            return Scalar(self.number(tok))
        if tok.kind == "ident":
            self.next()
            if tok.text in _ATOMS:
                return _ATOMS[tok.text]
            if tok.text in ("L", "M"):
                q = self.quat()
                return LeftMul(q) if tok.text == "L" else RightMul(q)
            self.error(f"unknown atom {tok.text!r}", tok)
        if tok.kind == "punct" and tok.text == "(":
            literal = self.try_paren_literal()
            if literal is not None:
                return literal
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        self.error(f"unexpected {tok.text or 'end of input'!r}", tok)

    def number(self, tok: Token):
        try:
            return parse_complex(tok.text, self.mode)
        except ValueError:
            self.error(f"bad number {tok.text!r}", tok)

    def complex_literal(self):
        """``[sign] number [(+|-) number j]`` starting at the current token, or ``None``."""
        start = self.i
        sign = ""
        if self.peek().kind == "punct" and self.peek().text in "+-":
            sign = self.next().text
        tok = self.peek()
        if tok.kind != "num":
            self.i = start
            return None
        self.next()
        text = sign + tok.text
        nxt, after = self.peek(), self.peek(1)
        if (not tok.text.endswith("j") and nxt.kind == "punct" and nxt.text in "+-"
                and after.kind == "num" and after.text.endswith("j")):
            self.i += 2
            text += nxt.text + after.text
        try:
            return parse_complex(text, self.mode)
        except ValueError:
            self.error(f"bad complex literal {text!r}", tok)

    def try_paren_literal(self):
        start = self.i
        self.next()  # "("
        value = self.complex_literal()
        if value is not None and self.peek().kind == "punct" and self.peek().text == ")":
            self.next()
            return Scalar(value)
        self.i = start
        return None

    def quat(self) -> Quaternion:
        self.expect("[")
        nested = self.peek().kind == "punct" and self.peek().text == "["
        if nested:
            self.next()
        parts = []
        for n in range(4):
            if n:
                self.expect(",")
            value = self.complex_literal()
            if value is None:
                self.error("expected a complex number")
            parts.append(value)
        self.expect("]")
        if nested:
            self.expect("]")
        return Quaternion(*parts, mode=self.mode)


def parse_expr(src: str, mode: str = EXACT) -> Node:
    return _Parser(src, mode).parse()


def lower(node: Node, mode: str = EXACT) -> ops.DiffOperator:
    if isinstance(node, Add):
        return lower(node.left, mode) + lower(node.right, mode)
    if isinstance(node, Sub):
        return lower(node.left, mode) - lower(node.right, mode)
    if isinstance(node, Mul):
        return lower(node.left, mode) @ lower(node.right, mode)
    if isinstance(node, Neg):
        return -lower(node.operand, mode)
    if isinstance(node, Moisil):
        return ops.moisil_theodoresco(mode)
    if isinstance(node, Deriv):
        return ops.partial(node.axis, mode)
    if isinstance(node, Reflect):
        return ops.reflect(node.axis, mode)
    if isinstance(node, LeftMul):
        return ops.const_left(node.q.to_mode(mode))
    if isinstance(node, RightMul):
        return ops.const_right(node.q.to_mode(mode))
    if isinstance(node, Scalar):
        return ops.scalar(to_mode(node.value, mode), mode)
    raise TypeError(f"not an operator node: {node!r}")


def parse_operator(src: str, mode: str = EXACT) -> ops.DiffOperator:
    return lower(parse_expr(src, mode), mode)


# ---------------------------------------------------------------- printing

def _is_bare_literal(value) -> bool:
    """Literals that print without parentheses: nonnegative real or imaginary only."""
    re_part, im_part = value.real, value.imag
    if re_part != 0 and im_part != 0:
        return False
    return (re_part if im_part == 0 else im_part) >= 0


def format_expr(node: Node, min_prec: int = 0) -> str:
    if isinstance(node, (Add, Sub)):
        op = " + " if isinstance(node, Add) else " - "
        text = format_expr(node.left, 1) + op + format_expr(node.right, 2)
    elif isinstance(node, Mul):
        text = format_expr(node.left, 2) + "*" + format_expr(node.right, 3)
    elif isinstance(node, Neg):
        text = "-" + format_expr(node.operand, 3)
    elif isinstance(node, Moisil):
        return "D"
    elif isinstance(node, Deriv):
        return f"d{node.axis}"
    elif isinstance(node, Reflect):
        return f"R{node.axis}"
    elif isinstance(node, (LeftMul, RightMul)):
        tag = "L" if isinstance(node, LeftMul) else "M"
        return tag + "[" + ", ".join(format_complex(c) for c in node.q.coords) + "]"
    elif isinstance(node, Scalar):
        lit = format_complex(node.value)
        return lit if _is_bare_literal(node.value) else f"({lit})"
    else:
        raise TypeError(f"not an operator node: {node!r}")
    return f"({text})" if node.prec < min_prec else text


def _product(factors: list[Node]) -> Node:
    node = factors[0]
    for f in factors[1:]:
        node = Mul(node, f)
    return node


def _sum(nodes: list[Node]) -> Node:
    node = nodes[0]
    for n in nodes[1:]:
        node = Add(node, n)
    return node


def operator_to_ast(op: ops.DiffOperator) -> Node:
    """Express a normal form in the grammar.

    Each matrix coefficient is expanded over the basis ``L[i_a]*M[i_b]``,
    which spans all 4x4 matrices.
    """
    mode = op.mode
    if op.is_zero():
        return Scalar(to_mode(0, mode))
    units = [Quaternion.unit(k, mode) for k in range(4)]
    one = to_mode(1, mode)
    summands = []
    for (deg, mask), coeff in op.items():
        parts = []
        for (a, b), c in sorted(decompose_matrix(coeff).items()):
            factors: list[Node] = []
            if c != one or (a == 0 and b == 0):
                factors.append(Scalar(c))
            if a:
                factors.append(LeftMul(units[a]))
            if b:
                factors.append(RightMul(units[b]))
            parts.append(_product(factors))
        coeff_node = _sum(parts)
        tail: list[Node] = []
        for axis, n in zip((1, 2, 3), deg):
            tail.extend([Deriv(axis)] * n)
        tail.extend(Reflect(k) for k in mask)
        if tail and coeff_node == Scalar(one):
            summands.append(_product(tail))
        else:
            summands.append(_product([coeff_node, *tail]))
    return _sum(summands)


def format_diff_operator(op: ops.DiffOperator) -> str:
    return format_expr(operator_to_ast(op))


__all__ = [
    "Add", "Deriv", "LeftMul", "Moisil", "Mul", "Neg", "Node", "ParseError", "Reflect",
    "RightMul", "Scalar", "Sub", "format_diff_operator", "format_expr", "lower",
    "operator_to_ast", "parse_expr", "parse_operator", "tokenize",
]
