"""Reading and writing polynomials as text.

Grammar (whitespace is free between tokens)::

    expr   := term (('+' | '-') term)*
    term   := ['-'] factor (['*'] factor)*
    factor := atom ['^' uint]
    atom   := number | 'i' | 'x' | 'y' | 'z' | '(' expr ')'

A number may carry an ``i`` suffix (``2i``, ``0.5i``).  Adjacent factors
multiply, so ``x(x+z)`` and ``2xy`` parse as written.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Union

from .algebra import BivariateQuadratic, LinearForm2, LinearForm3, TernaryQuadratic
from .errors import DegreeError, ExpressionSyntaxError, VariableError


class Mode(str, enum.Enum):
    HOMOGENEOUS3 = "h3"
    AFFINE2 = "a2"


# --------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class Num:
    value: complex


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Var, Neg, BinOp, Pow]


# --------------------------------------------------------------------------
# lexer

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


@dataclass(frozen=True)
class _Token:
    kind: str  # 'num', 'imag', 'var', 'op', 'end'
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _NUMBER.match(text, pos)
        if m:
            end = m.end()
            if end < n and text[end] == "i":
                tokens.append(_Token("imag", m.group(), pos))
                end += 1
            else:
                tokens.append(_Token("num", m.group(), pos))
            pos = end
        elif ch in "xyz":
            tokens.append(_Token("var", ch, pos))
            pos += 1
        elif ch == "i":
            tokens.append(_Token("imag", "1", pos))
            pos += 1
        elif ch in "+-*^()":
            tokens.append(_Token("op", ch, pos))
            pos += 1
        else:
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", _byte_offset(text, pos))
    tokens.append(_Token("end", "", n))
    return tokens


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


# --------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.k]

    def error(self, message: str):
        raise ExpressionSyntaxError(message, _byte_offset(self.text, self.tok.pos))

    def is_op(self, ch: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == ch

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.is_op("+") or self.is_op("-"):
            op = self.tok.text
            self.k += 1
            node = BinOp(op, node, self.term())
        return node

    def starts_atom(self) -> bool:
        return self.tok.kind in ("num", "imag", "var") or self.is_op("(")

    def term(self) -> Node:
        negate = False
        if self.is_op("-"):
            negate = True
            self.k += 1
        node = self.factor()
        while True:
            if self.is_op("*"):
                self.k += 1
            elif not self.starts_atom():
                break
            node = BinOp("*", node, self.factor())
        return Neg(node) if negate else node

    def factor(self) -> Node:
        node = self.atom()
        if self.is_op("^"):
            self.k += 1
            if self.tok.kind != "num" or not self.tok.text.isdigit():
                self.error("exponent must be a nonnegative integer")
            exponent = int(self.tok.text)
            self.k += 1
            node = Pow(node, exponent)
        return node

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "num":
            self.k += 1
            return Num(complex(float(t.text)))
        if t.kind == "imag":
            self.k += 1
            return Num(complex(0.0, float(t.text)))
        if t.kind == "var":
            self.k += 1
            return Var(t.text)
        if self.is_op("("):
            self.k += 1
            node = self.expr()
            if not self.is_op(")"):
                self.error("expected ')'")
            self.k += 1
            return node
        if t.kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {t.text!r}")


def parse_ast(text: str) -> Node:
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# expansion to monomials (exponent triples over x, y, z)

Poly = dict[tuple[int, int, int], complex]
_MAX_DEGREE = 2
_VAR_EXP = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}


def _mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            if sum(e) > _MAX_DEGREE and ca * cb != 0:
                raise DegreeError("polynomial degree exceeds 2")
            out[e] = out.get(e, 0j) + ca * cb
    return out


def _add(a: Poly, b: Poly, sign: int = 1) -> Poly:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0j) + c if sign > 0 else out.get(e, 0j) - c
    return out


def expand(node: Node) -> Poly:
    """Monomial normal form of a syntax tree; degree is capped at two."""
    if isinstance(node, Num):
        return {(0, 0, 0): node.value}
    if isinstance(node, Var):
        return {_VAR_EXP[node.name]: 1 + 0j}
    if isinstance(node, Neg):
        return {e: -c for e, c in expand(node.operand).items()}
    if isinstance(node, BinOp):
        left, right = expand(node.left), expand(node.right)
        if node.op == "*":
            return _mul(left, right)
        return _add(left, right, 1 if node.op == "+" else -1)
    if isinstance(node, Pow):
        base = expand(node.base)
        if all(sum(e) == 0 or c == 0 for e, c in base.items()):
            return {(0, 0, 0): base.get((0, 0, 0), 0j) ** node.exponent}
        if node.exponent > _MAX_DEGREE:
            raise DegreeError("polynomial degree exceeds 2")
        out: Poly = {(0, 0, 0): 1 + 0j}
        for _ in range(node.exponent):
            out = _mul(out, base)
        return out
    raise TypeError(f"unknown node {node!r}")


def _uses_z(node: Node) -> bool:
    if isinstance(node, Var):
        return node.name == "z"
    if isinstance(node, (Neg,)):
        return _uses_z(node.operand)
    if isinstance(node, BinOp):
        return _uses_z(node.left) or _uses_z(node.right)
    if isinstance(node, Pow):
        return _uses_z(node.base)
    return False


_TERNARY_SLOTS = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
_BIVARIATE_SLOTS = [(2, 0, 0), (0, 2, 0), (0, 0, 0), (1, 1, 0), (1, 0, 0), (0, 1, 0)]


def parse_polynomial(text: str, mode: Mode | str = Mode.HOMOGENEOUS3):
    """Parse ``text`` into a TernaryQuadratic (h3) or BivariateQuadratic (a2)."""
    mode = Mode(mode)
    if not text.strip():
        raise ExpressionSyntaxError("empty expression", 0)
    node = parse_ast(text)
    if mode is Mode.AFFINE2 and _uses_z(node):
        raise VariableError("variable z is not allowed in affine mode")
    poly = expand(node)
    if mode is Mode.HOMOGENEOUS3:
        if any(sum(e) != 2 and c != 0 for e, c in poly.items()):
            raise DegreeError("expression is not homogeneous of degree 2")
        return TernaryQuadratic(*(poly.get(e, 0j) for e in _TERNARY_SLOTS))
    return BivariateQuadratic(*(poly.get(e, 0j) for e in _BIVARIATE_SLOTS))


def parse_linear_form(text: str, affine: bool = False):
    """Parse a line: ``a*x + b*y + c*z`` or, with ``affine``, ``a*x + b*y + c``."""
    node = parse_ast(text)
    if affine and _uses_z(node):
        raise VariableError("variable z is not allowed in affine mode")
    poly = expand(node)
    if affine:
        if any(sum(e) > 1 and c != 0 for e, c in poly.items()):
            raise DegreeError("expected an affine linear form")
        return LinearForm2(poly.get((1, 0, 0), 0j), poly.get((0, 1, 0), 0j), poly.get((0, 0, 0), 0j))
    if any(sum(e) != 1 and c != 0 for e, c in poly.items()):
        raise DegreeError("expected a homogeneous linear form")
    return LinearForm3(poly.get((1, 0, 0), 0j), poly.get((0, 1, 0), 0j), poly.get((0, 0, 1), 0j))


# --------------------------------------------------------------------------
# printing


def format_real(v: float) -> str:
    """Shortest text that reads back as the same float, without a trailing '.0'."""
    s = repr(float(v))
    return s[:-2] if s.endswith(".0") else s


def format_scalar(c: complex) -> str:
    c = complex(c)
    if c.imag == 0:
        return format_real(c.real + 0.0)
    im = format_real(abs(c.imag))
    im = "" if im == "1" else im
    if c.real == 0:
        return f"{'-' if c.imag < 0 else ''}{im}i"
    return f"{format_real(c.real)}{'-' if c.imag < 0 else '+'}{im}i"


def _term(c: complex, mono: str) -> tuple[bool, str]:
    """(negative?, body) for one printed term."""
    if c.imag == 0:
        mag = abs(c.real)
        if not mono:
            return c.real < 0, format_real(mag)
        return c.real < 0, mono if mag == 1 else f"{format_real(mag)}*{mono}"
    if c.real == 0:
        mag = abs(c.imag)
        num = "i" if mag == 1 else f"{format_real(mag)}i"
        return c.imag < 0, num if not mono else f"{num}*{mono}"
    body = f"({format_scalar(c)})"
    return False, body if not mono else f"{body}*{mono}"


def _join(terms: list[tuple[complex, str]]) -> str:
    out = []
    for c, mono in terms:
        if c == 0:
            continue
        neg, body = _term(c, mono)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) or "0"


def format_polynomial(p: TernaryQuadratic | BivariateQuadratic) -> str:
    """Canonical text: x^2, x*y, y^2, then the z (or lower-degree) terms."""
    if isinstance(p, TernaryQuadratic):
        terms = [(p.cxx, "x^2"), (p.cxy, "x*y"), (p.cyy, "y^2"),
                 (p.cxz, "x*z"), (p.cyz, "y*z"), (p.czz, "z^2")]
    else:
        terms = [(p.cxx, "x^2"), (p.cxy, "x*y"), (p.cyy, "y^2"),
                 (p.cx, "x"), (p.cy, "y"), (p.c, "")]
    return _join(terms)


def format_linear(l: LinearForm3 | LinearForm2) -> str:
    last = "z" if isinstance(l, LinearForm3) else ""
    return _join([(l.a, "x"), (l.b, "y"), (l.c, last)])


def format_split(l1, l2) -> str:
    return f"({format_linear(l1)})({format_linear(l2)})"
