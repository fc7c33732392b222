"""Exact scalars: rationals (``fractions.Fraction``) and elements of Q(sqrt d)."""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import FieldMismatchError

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"±num/den"`` or ``"±num"``; decimals are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def integer_root(n: int, k: int) -> int | None:
    """Exact k-th root of an integer, or None."""
    if k <= 0:
        raise ValueError("root degree must be positive")
    if n < 0:
        if k % 2 == 0:
            return None
        r = integer_root(-n, k)
        return None if r is None else -r
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k)) if n.bit_length() < 1000 else _iroot(n, k)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == n:
            return cand
    r = _iroot(n, k)
    return r if r ** k == n else None


def _iroot(n: int, k: int) -> int:
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def rational_power(q, e: Fraction):
    """q**e for rational q and e when the result is rational, else None."""
    q, e = Fraction(q), Fraction(e)
    if q == 0:
        return Fraction(0) if e > 0 else None
    if e.denominator == 1:
        return q ** e.numerator
    k = e.denominator
    rn = integer_root(q.numerator, k)
    rd = integer_root(q.denominator, k)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd) ** e.numerator


def squarefree_part(n: int) -> tuple[int, int]:
    """Write n = s * f**2 with s squarefree; return (s, f)."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    f = 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            f *= p
        p += 1 if p == 2 else 2
    return sign * n, f


def is_squarefree(d: int) -> bool:
    return d != 0 and squarefree_part(d)[1] == 1


class QuadraticNumber:
    """a + b*sqrt(d) with rational a, b and fixed squarefree d != 1."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if not is_squarefree(d) or d == 1:
            raise ValueError(f"discriminant must be squarefree and != 1, got {d}")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    @classmethod
    def sqrt_of(cls, q) -> "QuadraticNumber | Fraction":
        """sqrt(q) for rational q, in Q when possible."""
        q = Fraction(q)
        r = rational_power(q, Fraction(1, 2))
        if r is not None:
            return r
        s, f = squarefree_part(q.numerator * q.denominator)
        return cls(0, Fraction(f, q.denominator), s)

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise FieldMismatchError(f"Q(sqrt {self.d}) vs Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Rational)):
            return QuadraticNumber(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a * o.a + self.d * self.b * o.b,
                               self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadraticNumber(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def sqrt(self):
        """Square root inside the same field, or None."""
        if self.b == 0:
            r = rational_power(self.a, Fraction(1, 2))
            if r is not None:
                return QuadraticNumber(r, 0, self.d)
            r = rational_power(self.a / self.d, Fraction(1, 2))
            if r is not None:
                return QuadraticNumber(0, r, self.d)
            return None
        # (u + v sqrt d)^2 = a + b sqrt d  =>  u^2 = (a +- sqrt(norm)) / 2
        rn = rational_power(self.norm(), Fraction(1, 2))
        if rn is None:
            return None
        for s in (rn, -rn):
            u = rational_power((self.a + s) / 2, Fraction(1, 2))
            if u:
                v = self.b / (2 * u)
                return QuadraticNumber(u, v, self.d)
        return None

    def __repr__(self):
        return f"QuadraticNumber({format_rational(self.a)}, {format_rational(self.b)}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        return f"{format_rational(self.a)}+({format_rational(self.b)})*sqrt({self.d})"


def to_field(value, d: int | None):
    """Coerce a rational into Q(sqrt d) (identity when d is None)."""
    if d is None or isinstance(value, QuadraticNumber):
        return value
    return QuadraticNumber(value, 0, d)


def common_discriminant(*values) -> int | None:
    d = None
    for v in values:
        if isinstance(v, QuadraticNumber) and v.b != 0:
            if d is not None and d != v.d:
                raise FieldMismatchError(f"Q(sqrt {d}) vs Q(sqrt {v.d})")
            d = v.d
    return d


def simplify_scalar(v):
    """Drop a QuadraticNumber to a Fraction when its irrational part is 0."""
    if isinstance(v, QuadraticNumber) and v.b == 0:
        return v.a
    return v
