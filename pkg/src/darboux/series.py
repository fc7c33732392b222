"""Truncated Puiseux series in a base variable x.

A series stores coefficients for the exponents ``(val + i)/ram`` and is
known modulo ``x**prec`` (``prec`` is an absolute exponent).  Every binary
operation keeps the smallest precision its inputs justify.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import CompositionDivergence, FieldExtensionNeeded
from .arith import QuadraticNumber, rational_power


def _ceil_frac(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


class PuiseuxSeries:
    __slots__ = ("coeffs", "val", "ram", "prec")

    def __init__(self, coeffs, val: int, ram: int, prec):
        prec = Fraction(prec)
        # plain ints would turn into floats under true division
        coeffs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        # drop leading zeros
        k = 0
        while k < len(coeffs) and not coeffs[k]:
            k += 1
        val += k
        coeffs = coeffs[k:]
        # drop terms at or beyond the precision
        keep = max(0, _ceil_frac(prec * ram) - val)
        coeffs = coeffs[:keep]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            val = _ceil_frac(prec * ram)
        self.coeffs = tuple(coeffs)
        self.val = val
        self.ram = ram
        self.prec = prec

    # --- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, prec, ram: int = 1) -> "PuiseuxSeries":
        return cls((), 0, ram, prec)

    @classmethod
    def monomial(cls, c, exponent, prec) -> "PuiseuxSeries":
        e = Fraction(exponent)
        return cls((c,), e.numerator, e.denominator, prec)

    @classmethod
    def from_poly(cls, poly, prec, ram: int = 1) -> "PuiseuxSeries":
        """Polynomial in t = x**(1/ram), truncated at x**prec."""
        return cls(poly.coeffs, 0, ram, prec)

    # --- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> Fraction:
        """Leading exponent; the precision for the (truncated) zero series."""
        if not self.coeffs:
            return self.prec
        return Fraction(self.val, self.ram)

    def leading_coefficient(self):
        if not self.coeffs:
            raise ValueError("zero series has no leading coefficient")
        return self.coeffs[0]

    def terms(self):
        """Yield (exponent, coefficient) for the nonzero terms."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield Fraction(self.val + i, self.ram), c

    def coefficient(self, exponent) -> object:
        e = Fraction(exponent)
        if e >= self.prec:
            raise ValueError(f"exponent {e} beyond precision {self.prec}")
        idx = e * self.ram
        if idx.denominator != 1:
            return Fraction(0)
        i = idx.numerator - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def at_ram(self, ram: int) -> "PuiseuxSeries":
        """Same series with exponents indexed in units of 1/ram."""
        if ram == self.ram:
            return self
        if ram % self.ram:
            raise ValueError(f"ramification {ram} is not a multiple of {self.ram}")
        f = ram // self.ram
        out = []
        for i, c in enumerate(self.coeffs):
            if i:
                out.extend([0] * (f - 1))
            out.append(c)
        return PuiseuxSeries(out, self.val * f, ram, self.prec)

    def reduced(self) -> "PuiseuxSeries":
        """Smallest ramification that hosts every exponent present."""
        g = self.ram
        if self.coeffs:
            g = gcd(g, self.val)
            for i, c in enumerate(self.coeffs):
                if c:
                    g = gcd(g, self.val + i)
        else:
            g = self.ram
        if g <= 1:
            return self
        return PuiseuxSeries(self.coeffs[::g], self.val // g, self.ram // g, self.prec)

    def truncate(self, prec) -> "PuiseuxSeries":
        prec = Fraction(prec)
        if prec > self.prec:
            raise ValueError("cannot raise the precision of a truncated series")
        return PuiseuxSeries(self.coeffs, self.val, self.ram, prec)

    # --- arithmetic -------------------------------------------------------
    def _common(self, other):
        if not isinstance(other, PuiseuxSeries):
            other = PuiseuxSeries((other,), 0, self.ram, self.prec)
        L = lcm(self.ram, other.ram)
        return self.at_ram(L), other.at_ram(L), L

    def __add__(self, other):
        if not isinstance(other, PuiseuxSeries):
            other = PuiseuxSeries((other,), 0, self.ram, self.prec)
        a, b, L = self._common(other)
        prec = min(a.prec, b.prec)
        if not a.coeffs:
            return PuiseuxSeries(b.coeffs, b.val, L, prec)
        if not b.coeffs:
            return PuiseuxSeries(a.coeffs, a.val, L, prec)
        v = min(a.val, b.val)
        n = max(a.val + len(a.coeffs), b.val + len(b.coeffs)) - v
        out = [0] * n
        for i, c in enumerate(a.coeffs):
            out[a.val - v + i] += c
        for i, c in enumerate(b.coeffs):
            out[b.val - v + i] += c
        return PuiseuxSeries(out, v, L, prec)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries([-c for c in self.coeffs], self.val, self.ram, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return PuiseuxSeries([c * other for c in self.coeffs], self.val, self.ram, self.prec)
        a, b, L = self._common(other)
        prec = min(a.valuation + b.prec, b.valuation + a.prec)
        if not a.coeffs or not b.coeffs:
            return PuiseuxSeries.zero(prec, L)
        v = a.val + b.val
        n = _ceil_frac(prec * L) - v
        if n <= 0:
            return PuiseuxSeries.zero(prec, L)
        out = [0] * n
        ac, bc = a.coeffs, b.coeffs
        for i in range(min(len(ac), n)):
            ci = ac[i]
            if not ci:
                continue
            for j in range(min(len(bc), n - i)):
                out[i + j] += ci * bc[j]
        return PuiseuxSeries(out, v, L, prec)

    __rmul__ = __mul__

    def __pow__(self, q):
        return self.pow(q)

    def pow(self, q) -> "PuiseuxSeries":
        """Rational power; the leading coefficient's root must exist in the field."""
        q = Fraction(q)
        if not self.coeffs:
            if q > 0:
                return PuiseuxSeries.zero(self.prec * q if self.prec > 0 else self.prec, self.ram)
            raise ZeroDivisionError("non-positive power of a zero series")
        v = self.valuation
        rel = self.prec - v
        if q == 0:
            return PuiseuxSeries((1,), 0, self.ram, rel)
        c0 = self.coeffs[0]
        lead = _field_power(c0, q)
        new_v = q * v
        L = lcm(self.ram, new_v.denominator)
        s = self.at_ram(L)
        u = [c / c0 for c in s.coeffs]  # unit part, u[0] == 1
        n = _ceil_frac(rel * L)
        w = _unit_power(u, q, n)
        w = [c * lead for c in w]
        return PuiseuxSeries(w, int(new_v * L), L, new_v + rel)

    def inverse(self) -> "PuiseuxSeries":
        return self.pow(-1)

    def __truediv__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return self * (1 / other if not isinstance(other, int) else Fraction(1, other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def derivative(self) -> "PuiseuxSeries":
        out = [c * Fraction(self.val + i, self.ram) for i, c in enumerate(self.coeffs)]
        return PuiseuxSeries(out, self.val - self.ram, self.ram, self.prec - 1)

    def compose(self, inner: "PuiseuxSeries") -> "PuiseuxSeries":
        return series_compose(self, inner)

    # --- comparison -------------------------------------------------------
    def first_mismatch(self, other: "PuiseuxSeries", upto=None):
        """Smallest exponent (< upto and both precisions) where coefficients differ."""
        a, b, L = self._common(other)
        bound = min(a.prec, b.prec)
        if upto is not None:
            bound = min(bound, Fraction(upto))
        lo = min(a.val, b.val)
        hi = _ceil_frac(bound * L)
        ad = dict(zip(range(a.val, a.val + len(a.coeffs)), a.coeffs))
        bd = dict(zip(range(b.val, b.val + len(b.coeffs)), b.coeffs))
        for k in range(lo, hi):
            if ad.get(k, 0) != bd.get(k, 0):
                return Fraction(k, L)
        return None

    def agrees(self, other, upto=None) -> bool:
        return self.first_mismatch(other, upto) is None

    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self.prec == other.prec and self.agrees(other)

    __hash__ = None

    def __repr__(self):
        parts = []
        for e, c in self.terms():
            parts.append(f"{c}*x^{e}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(x^{self.prec})"


def _field_power(c, q: Fraction):
    if q.denominator == 1:
        return c ** q.numerator
    if isinstance(c, QuadraticNumber):
        if c.b == 0:
            c = c.a
        else:
            if c == 1:
                return c
            if q.denominator == 2:
                r = c.sqrt()
                if r is not None:
                    return r ** q.numerator
            raise FieldExtensionNeeded(f"{c}^{q} is not in Q(sqrt {c.d})")
    r = rational_power(c, q)
    if r is None:
        raise FieldExtensionNeeded(f"{c}^{q} is not rational")
    return r


def _unit_power(u, q: Fraction, n: int):
    """Coefficients of (sum u_k t^k)^q, u_0 = 1, to n terms (J.C.P. Miller)."""
    if n <= 0:
        return []
    w = [Fraction(1)] + [0] * (n - 1)
    m = len(u)
    for k in range(1, n):
        acc = Fraction(0)
        for j in range(1, min(k, m - 1) + 1):
            uj = u[j]
            if uj:
                acc += ((q + 1) * j - k) * uj * w[k - j]
        w[k] = acc / k
    return w


def series_compose(outer: PuiseuxSeries, inner: PuiseuxSeries) -> PuiseuxSeries:
    """outer(inner) for a power series ``outer`` and ``inner`` vanishing at 0."""
    if outer.ram != 1 and outer.coeffs:
        outer = outer.reduced()
        if outer.ram != 1:
            raise ValueError("outer series must be an ordinary power series")
    if outer.coeffs and outer.val < 0:
        raise ValueError("outer series must not have a pole")
    if inner.is_zero():
        v = inner.prec
        if v <= 0:
            raise CompositionDivergence("inner series is not known to vanish")
    else:
        v = inner.valuation
        if v <= 0:
            raise CompositionDivergence(f"inner series has valuation {v} <= 0")
    N = outer.prec  # outer known modulo u**N
    prec = min(inner.prec, N * v)
    L = inner.ram
    T = _ceil_frac(prec * L)
    a = [outer.coefficient(k) for k in range(int(_ceil_frac(N)))]
    inn = [0] * T
    for i, c in enumerate(inner.coeffs):
        if inner.val + i < T:
            inn[inner.val + i] = c
    acc = [0] * T
    for ak in reversed(a):
        # acc = acc * inner + ak (truncated to T index positions)
        new = [0] * T
        for i in range(T):
            ci = acc[i]
            if not ci:
                continue
            for j in range(1, T - i):
                if inn[j]:
                    new[i + j] += ci * inn[j]
        if T:
            new[0] += ak
        acc = new
    return PuiseuxSeries(acc, 0, L, prec)
