"""Dense univariate polynomials and rational functions with exact coefficients.

Coefficients are ``Fraction`` (or ``QuadraticNumber`` for Q(sqrt d) work);
tuples run from the constant term upwards.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as igcd, lcm as ilcm

from .arith import format_rational


def _strip(coeffs) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _frac(c):
    return Fraction(c) if isinstance(c, int) else c


class Poly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "x"):
        self.coeffs = _strip(tuple(_frac(c) for c in coeffs))
        self.var = var

    @classmethod
    def gen(cls, var: str = "x") -> "Poly":
        return cls((0, 1), var)

    @classmethod
    def const(cls, c, var: str = "x") -> "Poly":
        return cls((c,), var)

    @classmethod
    def from_roots(cls, roots, var: str = "x") -> "Poly":
        p = cls.const(1, var)
        for r in roots:
            p = p * cls((-r, 1), var)
        return p

    # --- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly((other,), self.var)

    # --- ring operations ----------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return Poly((), self.var)
            return Poly([c * other for c in self.coeffs], self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        return self * c

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv_lc = 1 / other.lc()
        if len(rem) <= db:
            return Poly((), self.var), Poly(rem, self.var)
        quot = [0] * (len(rem) - db)
        b = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c * inv_lc
            quot[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] -= c * b[j]
        return Poly(quot, self.var), Poly(rem[:db], self.var)

    def __floordiv__(self, other):
        return self.divmod(self._lift(other))[0]

    def __mod__(self, other):
        return self.divmod(self._lift(other))[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def divides(self, other: "Poly") -> bool:
        return other.divmod(self)[1].is_zero()

    # --- evaluation and calculus --------------------------------------
    def __call__(self, value):
        """Horner evaluation at any ring element (scalar, Poly, series...)."""
        if not self.coeffs:
            return 0 * value if not isinstance(value, (int, Fraction)) else Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly((), inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lc())

    def valuation(self) -> int:
        """Order of vanishing at 0 (lowest nonzero index)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("valuation of the zero polynomial")

    def primitive(self) -> tuple[Fraction, "Poly"]:
        """Split a rational polynomial as content * (integer primitive, lc > 0)."""
        if self.is_zero():
            return Fraction(0), self
        den = reduce(ilcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(igcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), Poly([Fraction(v // g) for v in ints], self.var)

    def map_coeffs(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs], self.var)

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    # --- printing --------------------------------------------------------
    def __repr__(self):
        return f"Poly({self}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = format_rational(c) if isinstance(c, Fraction) else f"({c})"
            if i == 0:
                terms.append(cs)
                continue
            mono = self.var if i == 1 else f"{self.var}^{i}"
            if cs == "1":
                terms.append(mono)
            elif cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append(f"{cs}*{mono}")
        out = "+".join(terms)
        return out.replace("+-", "-")


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0.

    Small inputs use Euclid's algorithm directly.  Larger ones go through
    sympy's dense gcd, which avoids the coefficient growth of the
    rational remainder sequence.
    """
    if f.var != g.var:
        raise ValueError("polynomials in different variables")
    if min(f.degree, g.degree) >= 4:
        return _sympy_gcd(f, g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.divmod(b)[1].monic()
    return a.monic()


def _sympy_gcd(f: Poly, g: Poly) -> Poly:
    from sympy.polys.domains import QQ
    from sympy.polys.euclidtools import dup_gcd

    def dense(p):
        return [QQ(c.numerator, c.denominator) for c in reversed(p.coeffs)]

    d = dup_gcd(dense(f), dense(g), QQ)
    cs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(d)]
    return Poly(cs, f.var).monic()


def poly_xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """(d, s, t) with s f + t g = d monic gcd."""
    r0, r1 = f, g
    s0, s1 = Poly.const(1, f.var), Poly((), f.var)
    t0, t1 = Poly((), f.var), Poly.const(1, f.var)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc()
    return r0 * inv, s0 * inv, t0 * inv


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return Poly((), f.var)
    return (f * g).exact_div(poly_gcd(f, g)).monic()


def inverse_mod(a: Poly, m: Poly) -> Poly:
    d, s, _ = poly_xgcd(a % m, m)
    if d.degree != 0:
        raise ZeroDivisionError("not invertible modulo the given polynomial")
    return s % m


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: f = lc * prod s_i^i with monic squarefree coprime s_i."""
    if f.degree <= 0:
        return []
    out = []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a)
    c = fp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
    return out


def rational_roots(f: Poly) -> list[Fraction]:
    """Distinct rational roots via the rational-root theorem."""
    if f.degree <= 0:
        return []
    f = f.primitive()[1]
    roots = []
    v = f.valuation()
    if v:
        roots.append(Fraction(0))
        f = Poly(f.coeffs[v:], f.var)
    if f.degree <= 0:
        return roots
    a0, an = int(f.coeffs[0]), int(f.coeffs[-1])
    for p in _divisors(abs(a0)):
        for q in _divisors(abs(an)):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if r not in roots and not f(r):
                    roots.append(r)
    return roots


def _divisors(n: int) -> list[int]:
    # Trial division is fine for the coefficient sizes seen in the catalog.
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def factor_rational(f: Poly) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """Full factorization over Q into monic irreducibles with multiplicity.

    Backed by sympy's Zassenhaus factorizer.
    """
    from sympy import Poly as SPoly, QQ, Symbol

    if f.is_zero():
        raise ValueError("factorization of the zero polynomial")
    if f.degree == 0:
        return f.lc(), []
    t = Symbol("t")
    sp = SPoly(list(reversed([QQ(c.numerator, c.denominator) for c in f.coeffs])), t, domain=QQ)
    lc, factors = sp.factor_list()
    out = []
    for fac, mult in factors:
        cs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(fac.all_coeffs())]
        out.append((Poly(cs, f.var).monic(), mult))
    out.sort(key=lambda pm: (pm[0].degree, [str(c) for c in pm[0].coeffs]))
    return f.lc(), out


class RationalFunction:
    """num/den in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, _normalized: bool = False):
        if den is None:
            den = Poly.const(1, num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            if num.is_zero():
                den = Poly.const(1, num.var)
            elif den.degree > 0:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            c = den.lc()
            if c != 1:
                inv = 1 / c
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c, var: str = "z") -> "RationalFunction":
        return cls(Poly.const(c, var), Poly.const(1, var), True)

    @property
    def var(self):
        return self.num.var

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other, Poly.const(1, other.var), True)
        return RationalFunction.const(other, self.var)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n, True)

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, Poly, int, Fraction)):
            o = self._lift(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, value):
        return self.num(value) / self.den(value)

    def derivative(self):
        return RationalFunction(self.num.derivative() * self.den - self.num * self.den.derivative(),
                                self.den * self.den)

    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __repr__(self):
        return f"RationalFunction(({self.num})/({self.den}))"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"
