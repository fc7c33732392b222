"""Weierstrass curves xi^2 = G(x), their group law and Q-divisors."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import ClassificationError, UnsupportedSupportError
from .arith import QuadraticNumber, simplify_scalar
from .poly import Poly, factor_rational, poly_gcd

TORSION_BOUND = 16


class WeierstrassCurve:
    """xi^2 = c3 x^3 + c2 x^2 + c1 x + c0."""

    def __init__(self, c3, c2, c1, c0, name: str = ""):
        self.c3, self.c2, self.c1, self.c0 = (Fraction(c) for c in (c3, c2, c1, c0))
        if self.c3 == 0:
            raise ValueError("cubic coefficient must be nonzero")
        self.G = Poly([self.c0, self.c1, self.c2, self.c3], "x")
        if poly_gcd(self.G, self.G.derivative()).degree > 0:
            raise ValueError("singular cubic")
        self.name = name

    def __eq__(self, other):
        return isinstance(other, WeierstrassCurve) and self.G == other.G

    def __hash__(self):
        return hash(self.G)

    def __repr__(self):
        label = self.name or "E"
        return f"{label}: xi^2 = {self.G}"

    def point(self, x, y) -> "CurvePoint":
        P = CurvePoint(x, y)
        if not on_curve(self, P):
            raise ValueError(f"{P} is not on {self!r}")
        return P

    @property
    def O(self) -> "CurvePoint":
        return INFINITY


class CurvePoint:
    """An affine point (x, y) with y = xi, or the point at infinity."""

    __slots__ = ("x", "y")

    def __init__(self, x=None, y=None):
        if (x is None) != (y is None):
            raise ValueError("both coordinates or neither")
        if x is not None:
            x = simplify_scalar(x if isinstance(x, QuadraticNumber) else Fraction(x))
            y = simplify_scalar(y if isinstance(y, QuadraticNumber) else Fraction(y))
        self.x = x
        self.y = y

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def is_rational(self) -> bool:
        return self.x is None or (isinstance(self.x, Fraction) and isinstance(self.y, Fraction))

    @property
    def degree(self) -> int:
        return 1

    def conjugate(self) -> "CurvePoint":
        if self.is_rational:
            return self
        def c(v):
            return v.conjugate() if isinstance(v, QuadraticNumber) else v
        return CurvePoint(c(self.x), c(self.y))

    def __neg__(self):
        if self.x is None:
            return self
        return CurvePoint(self.x, -self.y)

    def __eq__(self, other):
        return isinstance(other, CurvePoint) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash(("pt", self.x, self.y))

    def __repr__(self):
        if self.x is None:
            return "O"
        return f"({self.x}, {self.y})"


INFINITY = CurvePoint()


def on_curve(E: WeierstrassCurve, P: CurvePoint) -> bool:
    if P.is_infinity:
        return True
    x, y = P.x, P.y
    return y * y == ((E.c3 * x + E.c2) * x + E.c1) * x + E.c0


def negate(E: WeierstrassCurve, P: CurvePoint) -> CurvePoint:
    return -P


def add(E: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Chord-and-tangent addition with O as identity."""
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return INFINITY
        # doubling (P == Q, y != 0)
        lam = (3 * E.c3 * P.x * P.x + 2 * E.c2 * P.x + E.c1) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = (lam * lam - E.c2) / E.c3 - P.x - Q.x
    y3 = -(lam * (x3 - P.x) + P.y)
    return CurvePoint(x3, y3)


def multiply(E: WeierstrassCurve, n: int, P: CurvePoint) -> CurvePoint:
    if n < 0:
        return multiply(E, -n, -P)
    result = INFINITY
    base = P
    while n:
        if n & 1:
            result = add(E, result, base)
        base = add(E, base, base)
        n >>= 1
    return result


def order_of(E: WeierstrassCurve, P: CurvePoint, bound: int = TORSION_BOUND) -> int | None:
    """Least n <= bound with nP = O, or None."""
    Q = P
    for n in range(1, bound + 1):
        if Q.is_infinity:
            return n
        Q = add(E, Q, P)
    return None


# --- closed points over Q -----------------------------------------------------

@dataclass(frozen=True)
class Component:
    """Conjugate points x = root of p, xi = q(x), with p irreducible over Q."""

    p: Poly
    q: Poly

    @property
    def degree(self) -> int:
        return self.p.degree

    @property
    def is_ramified(self) -> bool:
        return self.q.is_zero()

    def conjugate(self) -> "Component":
        return Component(self.p, -self.q)

    def __repr__(self):
        return f"{{{self.p} = 0, xi = {self.q}}}"


@dataclass(frozen=True)
class Fiber:
    """Both points above the roots of p; degree 2 deg p (no splitting asserted)."""

    p: Poly

    @property
    def degree(self) -> int:
        return 2 * self.p.degree

    def __repr__(self):
        return f"{{{self.p} = 0}}"


def make_component(E: WeierstrassCurve, p: Poly, q: Poly):
    """Normalized closed point for (p, q): rational when deg p == 1."""
    p = p.monic()
    q = q.divmod(p)[1]
    if not (q * q - E.G).divmod(p)[1].is_zero():
        raise ValueError(f"xi = {q} does not lie on the curve modulo {p}")
    if p.degree == 1:
        x0 = -p.coeffs[0]
        return CurvePoint(x0, q(x0))
    return Component(p, q)


def component_points(E: WeierstrassCurve, c) -> list[CurvePoint]:
    """Explicit points of a degree-2 component over Q(sqrt D)."""
    if isinstance(c, CurvePoint):
        return [c]
    p = c.p
    if p.degree != 2:
        raise UnsupportedSupportError(f"points of {c} need a field of degree {p.degree}")
    c0, c1 = p.coeffs[0], p.coeffs[1]
    disc = c1 * c1 - 4 * c0
    root = QuadraticNumber.sqrt_of(disc)
    pts = []
    for s in (1, -1):
        x = (-c1 + s * root) / 2
        if isinstance(c, Fiber):
            y2 = E.G(x)
            y = y2.sqrt() if isinstance(y2, QuadraticNumber) else QuadraticNumber.sqrt_of(y2)
            if y is None:
                raise UnsupportedSupportError(f"{c} does not split over Q(sqrt {root.d})")
            pts += [CurvePoint(x, y), CurvePoint(x, -y)]
        else:
            pts.append(CurvePoint(x, c.q(x)))
    return pts


def closed_point_sum(E: WeierstrassCurve, c) -> CurvePoint:
    """Group sum of the geometric points of a closed point (always rational)."""
    if isinstance(c, CurvePoint):
        return c
    if isinstance(c, Fiber):
        return INFINITY
    if c.is_ramified:
        # 2-torsion points over the roots of p; all three sum to O
        rest = E.G.monic().exact_div(c.p)
        if rest.degree == 0:
            return INFINITY
        if rest.degree == 1:
            return CurvePoint(-rest.coeffs[0], 0)
        raise UnsupportedSupportError(f"unexpected ramified component {c}")
    # The function xi - q(x) vanishes on c and on the other roots of
    # q^2 - G; its divisor sums to O.
    N = c.q * c.q - E.G
    _, facs = factor_rational(N)
    total = INFINITY
    own = 0
    for s, e in facs:
        if s == c.p:
            own = e
            continue
        r = c.q.divmod(s)[1]
        if s.divides(E.G):
            other = make_component(E, s, Poly.const(0, "x"))
        else:
            other = make_component(E, s, r)
        total = add(E, total, multiply(E, e, closed_point_sum(E, other)))
    if own != 1:
        raise UnsupportedSupportError(f"component {c} met with multiplicity {own}")
    return -total


# --- divisors -------------------------------------------------------------------

class QDivisor:
    """Finite formal sum of closed points with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for P, a in (coeffs or {}).items():
            a = Fraction(a)
            if a:
                clean[P] = clean.get(P, 0) + a
        self.coeffs = {P: a for P, a in clean.items() if a}

    @classmethod
    def point(cls, P, a=1) -> "QDivisor":
        return cls({P: a})

    def degree(self) -> Fraction:
        return sum((a * P.degree for P, a in self.coeffs.items()), Fraction(0))

    def support(self):
        return list(self.coeffs)

    def __getitem__(self, P):
        return self.coeffs.get(P, Fraction(0))

    def __add__(self, other):
        out = dict(self.coeffs)
        for P, a in other.coeffs.items():
            out[P] = out.get(P, 0) + a
        return QDivisor(out)

    def __neg__(self):
        return QDivisor({P: -a for P, a in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "QDivisor":
        c = Fraction(c)
        return QDivisor({P: a * c for P, a in self.coeffs.items()})

    __rmul__ = scale

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs.values())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, QDivisor) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for P, a in sorted(self.coeffs.items(), key=lambda kv: _point_sort_key(kv[0])):
            parts.append(f"{a}*{P!r}")
        return " + ".join(parts)


def _point_sort_key(P):
    if isinstance(P, CurvePoint):
        if P.is_infinity:
            return (0, "")
        return (1, repr(P))
    return (2, repr(P))


def divisor_class_sum(E: WeierstrassCurve, D: QDivisor) -> CurvePoint:
    """Sum of a_P P for an integral divisor supported on individual points."""
    total = INFINITY
    for P, a in D.coeffs.items():
        if not isinstance(P, CurvePoint):
            raise UnsupportedSupportError(f"closed point {P!r} of degree {P.degree} in support")
        if a.denominator != 1:
            raise ValueError("divisor coefficients must be integers")
        total = add(E, total, multiply(E, int(a), P))
    return total


@dataclass
class PrincipalityResult:
    principal: bool | None
    degree: Fraction
    multiple: int = 1
    class_sum: CurvePoint | None = None
    torsion_order: int | None = None
    reason: str = ""

    def __bool__(self):
        return bool(self.principal)

    @property
    def decided(self) -> bool:
        return self.principal is not None


def is_principal(E: WeierstrassCurve, D: QDivisor, bound: int = TORSION_BOUND) -> PrincipalityResult:
    """Degree 0 and the denominator-clearing multiple sums to a torsion point."""
    deg = D.degree()
    if deg != 0:
        return PrincipalityResult(False, deg, reason="degree is not zero")
    m = 1
    for a in D.coeffs.values():
        m = lcm(m, a.denominator)
    total = INFINITY
    try:
        for P, a in D.coeffs.items():
            n = int(a * m)
            total = add(E, total, multiply(E, n, closed_point_sum(E, P)))
    except UnsupportedSupportError as exc:
        return PrincipalityResult(None, deg, m, reason=str(exc))
    order = order_of(E, total, bound)
    if order is None:
        return PrincipalityResult(False, deg, m, total, None, "class sum is not torsion within bound")
    return PrincipalityResult(True, deg, m, total, order, "")


# --- the catalog curves -----------------------------------------------------------

CURVES = {
    "E3": WeierstrassCurve(-9, 33, 1, 0, "E3"),
    "E4": WeierstrassCurve(-5, 5, 1, 0, "E4"),
    "E5": WeierstrassCurve(16, 17, 1, 0, "E5"),
    "E6": WeierstrassCurve(-1, 1, 1, 0, "E6"),
}


def get_curve(name: str) -> WeierstrassCurve:
    try:
        return CURVES[name]
    except KeyError:
        raise KeyError(f"unknown curve {name!r}; known: {', '.join(CURVES)}") from None


# --- named points on E4 ---------------------------------------------------------

E4_GENERATOR = CurvePoint(Fraction(1, 5), Fraction(3, 5))
E4_TORSION = CurvePoint(0, 0)


def e4_named_point(kind: str, n: int) -> CurvePoint:
    """A_n = nA, tilde A_n = -A_n, A*_n = A_n + O*, tilde A*_n = -A*_n."""
    E = CURVES["E4"]
    P = multiply(E, n, E4_GENERATOR)
    if kind in ("A*", "~A*"):
        P = add(E, P, E4_TORSION)
    if kind.startswith("~"):
        P = -P
    return P


def e4_coordinates(P: CurvePoint, search: int = 12) -> tuple[int, int]:
    """(N, L) with P = N*A + L*O*, where L is 0 or 1."""
    E = CURVES["E4"]
    for n in range(-search, search + 1):
        base = multiply(E, n, E4_GENERATOR)
        if base == P:
            return n, 0
        if add(E, base, E4_TORSION) == P:
            return n, 1
    raise ClassificationError(f"{P!r} is not a named E4 point within |n| <= {search}")


def e4_parity_check(D: QDivisor) -> bool:
    """Sum of N(S_j) is 0 and sum of L(S_j) is even (integral divisors)."""
    n_sum = 0
    l_sum = 0
    for P, a in D.coeffs.items():
        if not isinstance(P, CurvePoint) or not P.is_rational:
            raise ClassificationError(f"{P!r} is not a named rational E4 point")
        n, l = e4_coordinates(P)
        n_sum += a * n
        l_sum += a * l
    return n_sum == 0 and l_sum % 2 == 0


# --- listed rational points -----------------------------------------------------

def _pts(*pairs):
    out = [INFINITY]
    for x, y in pairs:
        out.append(CurvePoint(Fraction(x), Fraction(y)))
    return out


# Rational points of E3, E5, E6 (whole Mordell-Weil groups) and the
# generators O* = (0,0), A = (1/5,3/5) on E4.
RATIONAL_POINTS = {
    "E3": _pts((0, 0), ("-1/9", "5/9"), ("-1/9", "-5/9"), (1, -5), (1, 5)),
    "E4": _pts((0, 0), ("1/5", "3/5")),
    "E5": _pts((0, 0), ("-1/4", "3/4"), ("-1/4", "-3/4"), (-1, 0), ("-1/16", 0),
               ("1/4", "-5/4"), ("1/4", "5/4")),
    "E6": _pts((0, 0), (-1, 1), (-1, -1), (1, -1), (1, 1)),
}


def group_closure(E: WeierstrassCurve, points, limit: int = 64) -> list[CurvePoint] | None:
    """Subgroup generated by points, or None if it exceeds limit elements."""
    group = [INFINITY]
    seen = {INFINITY}
    frontier = list(points)
    while frontier:
        P = frontier.pop()
        if P in seen:
            continue
        seen.add(P)
        group.append(P)
        if len(group) > limit:
            return None
        for Q in list(group):
            for R in (add(E, P, Q), add(E, P, -Q)):
                if R not in seen:
                    frontier.append(R)
    return group


def rational_torsion_points(E: WeierstrassCurve, bound: int = TORSION_BOUND) -> list[CurvePoint]:
    """Listed rational points of finite order, closed under the group law."""
    listed = RATIONAL_POINTS.get(E.name, [INFINITY])
    torsion = [P for P in listed if order_of(E, P, bound) is not None]
    return sorted(group_closure(E, torsion), key=_point_sort_key)
