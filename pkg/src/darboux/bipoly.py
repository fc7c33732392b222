"""Polynomials in x and xi with rational coefficients, plus their text form.

Grammar (whitespace ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/" | <juxtaposition>) unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | "x" | "xi" | "(" expr ")"

Division is only allowed by a nonzero constant, so "3/4*x" is a rational
coefficient.  ``format_bipoly`` prints the canonical form, and parsing the
printed form returns an equal polynomial.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .arith import format_rational
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|(xi|x)|([-+*/^()]))")


class BiPoly:
    """Sparse polynomial: {(i, j): c} stands for c * x^i * xi^j."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[k] = c
        self.terms = clean

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def xi(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def from_poly(cls, p: Poly) -> "BiPoly":
        return cls({(i, 0): c for i, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def xi_degree(self) -> int:
        return max((j for _, j in self.terms), default=0)

    def x_degree(self) -> int:
        return max((i for i, _ in self.terms), default=0)

    def constant_term(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def xi_parts(self) -> list[Poly]:
        """Coefficients of xi^0, xi^1, ... as polynomials in x."""
        n = self.xi_degree()
        parts = []
        for j in range(n + 1):
            coeffs = [0] * (self.x_degree() + 1)
            for (i, jj), c in self.terms.items():
                if jj == j:
                    coeffs[i] = c
            parts.append(Poly(coeffs, "x"))
        return parts

    def to_poly(self) -> Poly:
        if self.xi_degree():
            raise ValueError("polynomial involves xi")
        return self.xi_parts()[0]

    def __repr__(self):
        return f"BiPoly({format_bipoly(self)!r})"

    def __str__(self):
        return format_bipoly(self)


def _lift(v) -> BiPoly:
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, Poly):
        return BiPoly.from_poly(v)
    return BiPoly.const(v)


def _monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("xi" if j == 1 else f"xi^{j}")
    return "*".join(parts)


def format_bipoly(p: BiPoly) -> str:
    """Canonical text: terms by increasing xi degree, then x degree."""
    if not p.terms:
        return "0"
    out = []
    for (i, j) in sorted(p.terms, key=lambda k: (k[1], k[0])):
        c = p.terms[(i, j)]
        mono = _monomial(i, j)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(sign + body)
    return "".join(out)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"unexpected character at {pos} in {self.text!r}")
            num, var, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif var is not None:
                self.tokens.append(("var", var))
            else:
                self.tokens.append(("op", op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ValueError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> BiPoly:
        if not self.tokens:
            raise ValueError("empty polynomial")
        v = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                v = v + rhs if val == "+" else v - rhs
            else:
                return v

    def term(self):
        v = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                v = v * self.unary()
            elif kind == "op" and val == "/":
                self.take()
                d = self.unary()
                if not d.is_constant() or d.is_zero():
                    raise ValueError(f"division by a non-constant in {self.text!r}")
                v = v * (1 / d.constant_term())
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                v = v * self.unary()
            else:
                return v

    def unary(self):
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            v = self.unary()
            return -v if val == "-" else v
        return self.power()

    def power(self):
        v = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k2, n = self.take()
            if k2 != "num":
                raise ValueError(f"exponent must be a non-negative integer in {self.text!r}")
            v = v ** n
        return v

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return BiPoly.const(val)
        if kind == "var":
            return BiPoly.x() if val == "x" else BiPoly.xi()
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")


def parse_bipoly(text: str) -> BiPoly:
    return _Parser(text).parse()
