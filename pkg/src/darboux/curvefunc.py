"""Functions f1(x) + xi*f2(x) on a curve xi^2 = G(x), their divisors and expansions.

A ``CurveFunction`` with ``curve=None`` is an ordinary rational function of
x (the genus-0 case).  ``RadicalFunction`` is a formal product of rational
powers of curve functions.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from .bipoly import BiPoly, parse_bipoly
from .elliptic import (
    INFINITY,
    CurvePoint,
    Fiber,
    QDivisor,
    WeierstrassCurve,
    make_component,
)
from .errors import FieldExtensionNeeded
from .arith import rational_power
from .poly import Poly, RationalFunction, factor_rational, inverse_mod, poly_gcd, poly_lcm
from .series import PuiseuxSeries

_X1 = Poly.const(1, "x")


def _rfx(v) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, Poly):
        return RationalFunction(v)
    return RationalFunction(Poly.const(Fraction(v), "x"), _X1, True)


class CurveFunction:
    __slots__ = ("curve", "f1", "f2")

    def __init__(self, curve: WeierstrassCurve | None, f1, f2=0):
        self.curve = curve
        self.f1 = _rfx(f1)
        self.f2 = _rfx(f2)
        if curve is None and not self.f2.is_zero():
            raise ValueError("xi part on a genus-0 function")

    # --- construction ---------------------------------------------------
    @classmethod
    def from_bipoly(cls, curve, p: BiPoly) -> "CurveFunction":
        parts = p.xi_parts()
        if curve is None:
            if len(parts) > 1:
                raise ValueError("xi used without a curve")
            return cls(None, parts[0])
        f1 = Poly.const(0, "x")
        f2 = Poly.const(0, "x")
        Gk = _X1
        for j, part in enumerate(parts):
            if j and j % 2 == 0:
                Gk = Gk * curve.G
            if j % 2 == 0:
                f1 = f1 + part * Gk
            else:
                f2 = f2 + part * Gk
        return cls(curve, f1, f2)

    @classmethod
    def parse(cls, curve, text: str) -> "CurveFunction":
        return cls.from_bipoly(curve, parse_bipoly(text))

    @classmethod
    def const(cls, curve, c) -> "CurveFunction":
        return cls(curve, c)

    @classmethod
    def x(cls, curve) -> "CurveFunction":
        return cls(curve, Poly.gen("x"))

    @classmethod
    def xi(cls, curve) -> "CurveFunction":
        return cls(curve, 0, 1)

    # --- arithmetic -------------------------------------------------------
    def _lift(self, other) -> "CurveFunction":
        if isinstance(other, CurveFunction):
            if other.curve != self.curve:
                raise ValueError("functions on different curves")
            return other
        return CurveFunction(self.curve, other)

    def is_zero(self) -> bool:
        return self.f1.is_zero() and self.f2.is_zero()

    def __add__(self, other):
        o = self._lift(other)
        return CurveFunction(self.curve, self.f1 + o.f1, self.f2 + o.f2)

    __radd__ = __add__

    def __neg__(self):
        return CurveFunction(self.curve, -self.f1, -self.f2)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if self.curve is None:
            return CurveFunction(None, self.f1 * o.f1)
        G = self.curve.G
        return CurveFunction(
            self.curve,
            self.f1 * o.f1 + self.f2 * o.f2 * G,
            self.f1 * o.f2 + self.f2 * o.f1,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "CurveFunction":
        return CurveFunction(self.curve, self.f1, -self.f2)

    def norm(self) -> RationalFunction:
        if self.curve is None:
            return self.f1
        return self.f1 * self.f1 - self.f2 * self.f2 * self.curve.G

    def inverse(self) -> "CurveFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        if self.curve is None:
            return CurveFunction(None, self.f1.inverse())
        n = self.norm()
        c = self.conjugate()
        return CurveFunction(self.curve, c.f1 / n, c.f2 / n)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CurveFunction(self.curve, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CurveFunction(self.curve, other)
        if not isinstance(other, CurveFunction):
            return NotImplemented
        return self.curve == other.curve and self.f1 == other.f1 and self.f2 == other.f2

    def __hash__(self):
        return hash((self.f1, self.f2))

    def derivative(self) -> "CurveFunction":
        """d/dx with xi' = G'(x) / (2 xi)."""
        if self.curve is None:
            return CurveFunction(None, self.f1.derivative())
        G = self.curve.G
        extra = self.f2 * G.derivative() / (G * 2)
        return CurveFunction(self.curve, self.f1.derivative(), self.f2.derivative() + extra)

    def compose_into(self, outer: RationalFunction) -> "CurveFunction":
        """outer(self) for a rational function outer in one variable."""
        num = _horner(outer.num, self)
        den = _horner(outer.den, self)
        return num / den

    def numerator_form(self):
        """(a, b, d) polynomials with self = (a + xi b) / d, d monic."""
        d = poly_lcm(self.f1.den, self.f2.den)
        a = self.f1.num * d.exact_div(self.f1.den)
        b = self.f2.num * d.exact_div(self.f2.den)
        return a, b, d

    def value_at(self, P: CurvePoint):
        if P.is_infinity:
            raise ValueError("value at infinity")
        v = self.f1(P.x)
        if not self.f2.is_zero():
            v = v + P.y * self.f2(P.x)
        return v

    def to_bipoly_text(self) -> str:
        """Text for polynomial functions (denominators must be constant)."""
        a, b, d = self.numerator_form()
        if d.degree > 0:
            raise ValueError("function has a polynomial denominator")
        p = (BiPoly.from_poly(a) + BiPoly.from_poly(b) * BiPoly.xi()) * (1 / d.lc())
        return str(p)

    def __repr__(self):
        if self.f2.is_zero():
            return f"CurveFunction({self.f1})"
        return f"CurveFunction({self.f1} + xi*({self.f2}))"


def _horner(p: Poly, f: CurveFunction) -> CurveFunction:
    acc = CurveFunction(f.curve, 0)
    for c in reversed(p.coeffs):
        acc = acc * f + c
    return acc


# --- divisors -----------------------------------------------------------------

@dataclass(frozen=True)
class P1Place:
    """A closed point of the x-line: roots of an irreducible p (None = infinity)."""

    p: Poly | None

    @property
    def degree(self) -> int:
        return 1 if self.p is None else self.p.degree

    def __repr__(self):
        return "inf" if self.p is None else f"{{{self.p} = 0}}"


P1_INFINITY = P1Place(None)


@lru_cache(maxsize=None)
def _sqrt_mod(G: Poly, s: Poly):
    """q with q^2 = G mod s (s irreducible), False if none, None if undecided."""
    g = G.divmod(s)[1]
    if s.degree == 1:
        x0 = -s.coeffs[0] / s.coeffs[1]
        r = rational_power(g(x0), Fraction(1, 2))
        return False if r is None else Poly.const(r, "x")
    undecided = False
    for c in range(0, 4):
        w = Poly([c, 1], "x") if c else _X1
        gw = (g * w * w).divmod(s)[1]
        beta, degenerate = _sqrt_mod_attempt(gw, s)
        if beta is not None:
            winv = inverse_mod(w, s)
            q = (beta * winv).divmod(s)[1]
            return q
        if not degenerate:
            return False
        undecided = True
    return None if undecided else False


def _sqrt_mod_attempt(g: Poly, s: Poly):
    """Square root of g in Q[x]/(s) from the factors of its norm polynomial."""
    X, Y = sympy.symbols("x y")
    s_expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(s.coeffs)], X)
    g_expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(g.coeffs)], X)
    R = sympy.resultant(s_expr.as_expr(), Y ** 2 - g_expr.as_expr(), X)
    _, facs = sympy.factor_list(sympy.Poly(R, Y))
    degenerate = False
    for m, _ in facs:
        mc = [Fraction(int(c.p), int(c.q)) for c in reversed(m.all_coeffs())]
        # reduce m(y) modulo y^2 - g over Q[x]/(s)
        u_k, v_k = _X1, Poly.const(0, "x")
        u = Poly.const(0, "x")
        v = Poly.const(0, "x")
        for coef in mc:
            u = u + u_k * coef
            v = v + v_k * coef
            u_k, v_k = (v_k * g).divmod(s)[1], u_k
        u = u.divmod(s)[1]
        v = v.divmod(s)[1]
        if v.is_zero():
            degenerate = True
            continue
        beta = (-u * inverse_mod(v, s)).divmod(s)[1]
        if (beta * beta - g).divmod(s)[1].is_zero():
            return beta, False
    return None, degenerate


def _x_poly_divisor(E: WeierstrassCurve, h: Poly, sign: int = 1) -> QDivisor:
    """Divisor of a nonzero polynomial in x on E."""
    out = Counter()
    if h.degree <= 0:
        return QDivisor()
    _, facs = factor_rational(h)
    for s, e in facs:
        if s.divides(E.G):
            out[make_component(E, s, Poly.const(0, "x"))] += 2 * e
            continue
        q = _sqrt_mod(E.G, s)
        if q is False or q is None:
            out[Fiber(s)] += e
        else:
            out[make_component(E, s, q)] += e
            out[make_component(E, s, -q)] += e
    out[INFINITY] -= 2 * h.degree
    return QDivisor({P: sign * a for P, a in out.items()})


def _coprime_divisor(E: WeierstrassCurve, a: Poly, b: Poly) -> QDivisor:
    """Divisor of a + xi b with gcd(a, b) = 1."""
    out = Counter()
    if b.is_zero():
        return QDivisor()
    N = a * a - E.G * b * b
    _, facs = factor_rational(N)
    for s, e in facs:
        if s.divides(E.G):
            out[make_component(E, s, Poly.const(0, "x"))] += e
            continue
        q = (-a * inverse_mod(b, s)).divmod(s)[1]
        out[make_component(E, s, q)] += e
    deg_a = a.degree if not a.is_zero() else -10 ** 9
    out[INFINITY] -= max(2 * deg_a, 3 + 2 * b.degree)
    return QDivisor(out)


def principal_divisor(f: CurveFunction) -> QDivisor:
    if f.is_zero():
        raise ValueError("divisor of the zero function")
    if f.curve is None:
        return _genus0_divisor(f.f1)
    E = f.curve
    a, b, d = f.numerator_form()
    if b.is_zero():
        return _x_poly_divisor(E, a) - _x_poly_divisor(E, d)
    g = poly_gcd(a, b) if not a.is_zero() else b.monic()
    a1 = a.exact_div(g) if not a.is_zero() else a
    b1 = b.exact_div(g)
    return _x_poly_divisor(E, g) + _coprime_divisor(E, a1, b1) - _x_poly_divisor(E, d)


def _genus0_divisor(f: RationalFunction) -> QDivisor:
    out = Counter()
    for poly, sign in ((f.num, 1), (f.den, -1)):
        if poly.degree > 0:
            _, facs = factor_rational(poly)
            for s, e in facs:
                out[P1Place(s)] += sign * e
    out[P1_INFINITY] += f.den.degree - f.num.degree
    return QDivisor(out)


def valuation_at(f: CurveFunction, P) -> int:
    D = principal_divisor(f)
    return int(D[P])


# --- radical functions -----------------------------------------------------------

class RadicalFunction:
    """constant * prod(factor_i ** exp_i) with rational exponents."""

    __slots__ = ("curve", "constant", "factors")

    def __init__(self, curve, constant=1, factors=()):
        self.curve = curve
        self.constant = Fraction(constant)
        self.factors = tuple((f, Fraction(e)) for f, e in factors)

    @classmethod
    def of(cls, f: CurveFunction, e=1) -> "RadicalFunction":
        return cls(f.curve, 1, [(f, e)])

    def __mul__(self, other):
        if isinstance(other, RadicalFunction):
            return RadicalFunction(self.curve, self.constant * other.constant,
                                   self.factors + other.factors)
        if isinstance(other, CurveFunction):
            return RadicalFunction(self.curve, self.constant, self.factors + ((other, Fraction(1)),))
        return RadicalFunction(self.curve, self.constant * Fraction(other), self.factors)

    __rmul__ = __mul__

    def __pow__(self, e):
        e = Fraction(e)
        c = rational_power(self.constant, e)
        if c is None:
            raise FieldExtensionNeeded(f"{self.constant}^{e} is not rational")
        return RadicalFunction(self.curve, c, [(f, k * e) for f, k in self.factors])

    def inverse(self) -> "RadicalFunction":
        return self ** -1

    def __truediv__(self, other):
        if isinstance(other, RadicalFunction):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    def integral_part(self) -> CurveFunction | None:
        """The product as a CurveFunction when every exponent is an integer."""
        if any(e.denominator != 1 for _, e in self.factors):
            return None
        acc = CurveFunction(self.curve, self.constant)
        for f, e in self.factors:
            acc = acc * f ** int(e)
        return acc

    def collected(self) -> "RadicalFunction":
        """Merge repeated factors and drop zero exponents."""
        acc = {}
        order = []
        for f, e in self.factors:
            if f not in acc:
                acc[f] = Fraction(0)
                order.append(f)
            acc[f] += e
        return RadicalFunction(self.curve, self.constant, [(f, acc[f]) for f in order if acc[f]])

    def __repr__(self):
        inner = " * ".join(f"({f})^{e}" for f, e in self.factors)
        return f"RadicalFunction({self.constant} * {inner})"


def radical_divisor(r: RadicalFunction) -> QDivisor:
    D = QDivisor()
    for f, e in r.factors:
        D = D + principal_divisor(f).scale(e)
    return D


# --- expansions at the base point -------------------------------------------------

def _xi_series(E: WeierstrassCurve, prec, branch: int) -> PuiseuxSeries:
    """xi = branch * t * sqrt(G/x) as a series in t = x^(1/2)."""
    G = E.G
    if G.coeffs[0] != 0:
        raise ValueError("base point (0,0) is not on the curve")
    U = Poly(G.coeffs[1:], "x")
    u = PuiseuxSeries.from_poly(U, prec).pow(Fraction(1, 2))
    return (u * PuiseuxSeries.monomial(branch, Fraction(1, 2), prec + 1)).truncate(prec)


def _poly_series(p: Poly, prec, ram) -> PuiseuxSeries:
    return PuiseuxSeries(p.coeffs, 0, 1, prec).at_ram(ram)


def _curve_function_series(f: CurveFunction, prec, branch: int = 1) -> PuiseuxSeries:
    a, b, d = f.numerator_form()
    v = d.valuation()
    P1 = Fraction(prec) + 2 * v + 1
    ram = 1 if f.curve is None else 2
    num = _poly_series(a, P1, ram)
    if not b.is_zero():
        num = num + _poly_series(b, P1, ram) * _xi_series(f.curve, P1, branch)
    out = num / _poly_series(d, P1, ram)
    return out.truncate(min(out.prec, Fraction(prec)))


def _prime_exponents(q: Fraction) -> Counter:
    out = Counter()
    for n, sgn in ((q.numerator, 1), (q.denominator, -1)):
        for p, k in sympy.factorint(abs(n)).items():
            out[int(p)] += sgn * int(k)
    return out


def _rational_constant(pieces) -> Fraction:
    """prod c_i^e_i for rational c_i and exponents, required to be rational."""
    primes = Counter()
    minus = Fraction(0)
    for c, e in pieces:
        c = Fraction(c)
        if c == 0:
            raise ZeroDivisionError("zero leading coefficient")
        if c < 0:
            minus += e
        for p, k in _prime_exponents(abs(c)).items():
            primes[p] += k * e
    value = Fraction(1)
    for p, k in primes.items():
        if k.denominator != 1:
            raise FieldExtensionNeeded(f"{p}^{k} is not rational")
        value *= Fraction(p) ** int(k)
    if minus.denominator != 1:
        raise FieldExtensionNeeded(f"(-1)^{minus} is not rational")
    return -value if int(minus) % 2 else value


def _radical_parts(r: RadicalFunction, prec, branch: int = 1):
    """(unit series with constant term 1, valuation, leading-constant pieces)."""
    prec = Fraction(prec)
    ram = 1 if r.curve is None else 2
    margin = Fraction(0)
    while True:
        lead_pieces = [(r.constant, Fraction(1))]
        mono = Fraction(0)
        unit = PuiseuxSeries((1,), 0, ram, prec + margin + 1)
        for f, e in r.factors:
            s = _curve_function_series(f, prec + margin + 1, branch)
            if s.is_zero():
                raise ValueError(f"factor {f} vanishes to the working precision")
            w = s.valuation
            c = s.leading_coefficient()
            lead_pieces.append((c, e))
            mono += w * e
            shifted = s * PuiseuxSeries.monomial(1 / c, -w, s.prec + 1)
            unit = unit * shifted.pow(e)
        if unit.prec + mono >= prec:
            return unit.truncate(prec - mono), mono, lead_pieces
        margin += prec - unit.prec - mono + 1


def _radical_series(r: RadicalFunction, prec, branch: int = 1) -> PuiseuxSeries:
    unit, mono, lead_pieces = _radical_parts(r, prec, branch)
    K = _rational_constant(lead_pieces)
    out = unit * PuiseuxSeries.monomial(K, mono, unit.prec + mono + 1)
    return out.truncate(Fraction(prec))


def normalized_expansion(f, order: int, branch: int = 1) -> tuple[Fraction, PuiseuxSeries]:
    """(valuation in t, unit series u with u(0) = 1) with f = c t^v u near the base point.

    The constant c is dropped, so no roots of leading coefficients are needed.
    The unit is exact through t^order.
    """
    if isinstance(f, CurveFunction):
        f = RadicalFunction.of(f)
    ram = 1 if f.curve is None else 2
    prec = Fraction(order + 1, ram)
    unit, mono, _ = _radical_parts(f, prec + 1, branch)
    return mono * ram, unit.truncate(prec)


def expand_at_base(f, order: int, branch: int = 1) -> PuiseuxSeries:
    """Expansion at (0,0) (or x = 0 in genus 0) through t^order.

    t = x on the line and t = x^(1/2) on an elliptic curve, with the branch
    xi = branch * t * sqrt(G/x).
    """
    curve = f.curve
    prec = Fraction(order + 1) if curve is None else Fraction(order + 1, 2)
    if isinstance(f, CurveFunction):
        f = RadicalFunction.of(f)
    return _radical_series(f, prec, branch)
