"""Branching of coverings, Hurwitz genus, fiber products and pull-back schemes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd, lcm

from .coverings import Covering, get_covering
from .curvefunc import CurveFunction, P1_INFINITY, P1Place, principal_divisor
from .elliptic import (QDivisor, WeierstrassCurve, is_principal,
                       rational_torsion_points)
from .errors import InconsistentBranchingError
from .hypergeom import HpgParams, RiemannScheme, SCHWARTZ_TYPES, riemann_scheme
from .poly import Poly, RationalFunction, factor_rational

INF = "inf"


def _value(v):
    if v is None or v == INF or v == float("inf"):
        return INF
    return Fraction(v)


def _as_function(c):
    if isinstance(c, Covering):
        return c.function
    if isinstance(c, str):
        return get_covering(c).function
    if isinstance(c, RationalFunction):
        return CurveFunction(None, c)
    return c


def _covering_degree(f: CurveFunction) -> int:
    if f.curve is None:
        return f.f1.degree()
    D = principal_divisor(f)
    return int(sum(a * P.degree for P, a in D.coeffs.items() if a > 0))


def fiber(c, value) -> list[tuple[object, int]]:
    """Closed points above value with their branching indices."""
    f = _as_function(c)
    v = _value(value)
    if f.curve is None:
        r = f.f1
        deg = r.degree()
        h = r.den if v == INF else r.num - r.den * v
        out = []
        if h.degree > 0:
            _, facs = factor_rational(h)
            out = [(P1Place(s), e) for s, e in facs]
        if deg - max(h.degree, 0) > 0:
            out.append((P1_INFINITY, deg - max(h.degree, 0)))
        return out
    if v == INF:
        D = principal_divisor(f)
        return [(P, int(-a)) for P, a in D.coeffs.items() if a < 0]
    D = principal_divisor(f - v) if v != 0 else principal_divisor(f)
    return [(P, int(a)) for P, a in D.coeffs.items() if a > 0]


def branching_data(c, value) -> list[int]:
    """Partition of the degree formed by branching indices above value."""
    out = []
    for P, e in fiber(c, value):
        out += [e] * P.degree
    return sorted(out, reverse=True)


def power_branching(c, n: int, value) -> list[int]:
    """Branching of x -> c(x^n) above value, from the fiber of c."""
    out = []
    for P, e in fiber(c, value):
        if P == P1_INFINITY or (isinstance(P, P1Place) and P.p == Poly.gen("x")):
            out.append(e * n)
        else:
            out += [e] * (n * P.degree)
    return sorted(out, reverse=True)


def dramifico_partition(m: int, k: int) -> list[int]:
    """floor(m/k) copies of k and (m mod k) ones."""
    return [k] * (m // k) + [1] * (m % k)


# Which critical value carries which exponent denominator, for the
# standard tetrahedral (2,3,3), octahedral (2,3,4) and icosahedral (2,3,5)
# equations.  The two order-3 points of the tetrahedral equation sit at 0
# and infinity.
STANDARD_POINTS = {
    "tetrahedral": ((2, Fraction(1)), (3, Fraction(0)), (3, INF)),
    "octahedral": ((2, Fraction(1)), (3, INF), (4, Fraction(0))),
    "icosahedral": ((2, Fraction(1)), (3, INF), (5, Fraction(0))),
}

GROUP_ORDER = {"tetrahedral": 12, "octahedral": 24, "icosahedral": 60}

# Darboux coverings of the standard equations, by degree; the maximal one is
# the minimal one with x -> x^n substituted.
STANDARD_COVERINGS = {
    "tetrahedral": {4: ("tetra4", 1), 6: ("tetra6", 1), 12: ("tetra12", 1)},
    "octahedral": {6: ("octa6b", 1), 8: ("octa8", 1), 12: ("octa12", 1), 24: ("octa6b", 4)},
    "icosahedral": {12: ("icosa12", 1), 20: ("icosa20", 1), 30: ("icosa30", 1), 60: ("icosa12", 5)},
}


def check_dramifico(c, k: int, value=None) -> bool:
    """Does the partition above the k-point consist of floor(m/k) k's and ones?

    Without an explicit value, every critical value of the standard
    placement with denominator k is checked; k = 1 checks a regular value.
    """
    if isinstance(c, str):
        c = get_covering(c)
    f = _as_function(c)
    m = _covering_degree(f)
    if value is not None:
        values = [value]
    elif k == 1:
        values = [Fraction(2)]
    else:
        family = c.spec.group if isinstance(c, Covering) else None
        if family is None:
            raise ValueError("value is required for coverings outside the standard registry")
        values = [v for kk, v in STANDARD_POINTS[family] if kk == k]
        if not values:
            raise ValueError(f"no critical value with denominator {k} for {family} coverings")
    want = dramifico_partition(m, k)
    return all(branching_data(f, v) == want for v in values)


def hurwitz_genus(degree: int, base_genus: int, branching) -> int:
    """g from 2g - 2 = degree (2 base_genus - 2) + sum (r_P - 1)."""
    total = 0
    for part in branching:
        if sum(part) != degree:
            raise InconsistentBranchingError(f"partition {list(part)} does not sum to {degree}")
        total += sum(r - 1 for r in part)
    two_g = degree * (2 * base_genus - 2) + total + 2
    if two_g % 2 or two_g < 0:
        raise InconsistentBranchingError(f"branching {branching} gives 2g = {two_g}")
    return two_g // 2


def fiber_product_branching(psi_partition, phi_partition) -> list[list[int]]:
    """Projection indices above each point of psi's fiber.

    A point of index r for psi meets a point of index a for phi in gcd(a, r)
    points, each of index lcm(a, r) / r over the source of psi.
    """
    out = []
    for r in psi_partition:
        part = []
        for a in phi_partition:
            part += [lcm(a, r) // r] * gcd(a, r)
        out.append(sorted(part, reverse=True))
    return out


# --- Klein maps and the genus table ------------------------------------------------

@dataclass(frozen=True)
class KleinBranching:
    """Branching of a Klein map over the standard points (in STANDARD_POINTS order)."""

    degree: int
    partitions: tuple  # one partition per standard point


def klein_branching(rep, family: str) -> KleinBranching:
    """Branching of the minimal Klein map from a main representative.

    Each exponent difference e sits above a standard point of denominator k
    with index e*k; all other points above the standard points have index k.
    The degree then follows from the Riemann-Hurwitz count (genus 0 to genus 0).
    """
    pts = STANDARD_POINTS[family]
    rep = [Fraction(e) for e in rep]
    best = None
    for assign in product(range(len(pts)), repeat=3):
        sing = [[] for _ in pts]
        ok = True
        for e, s in zip(rep, assign):
            r = e * pts[s][0]
            if r.denominator != 1:
                ok = False
                break
            sing[s].append(int(r))
        if not ok:
            continue
        # sum over points of (#points above s) = d + 2
        slope = sum(Fraction(1, k) for k, _ in pts) - 1
        rhs = 2 - sum(len(x) for x in sing) + sum(Fraction(sum(x), k) for x, (k, _) in zip(sing, pts))
        d = rhs / slope
        if d.denominator != 1 or d < 1:
            continue
        d = int(d)
        parts = []
        for x, (k, _) in zip(sing, pts):
            rest = d - sum(x)
            if rest < 0 or rest % k:
                ok = False
                break
            parts.append(tuple(sorted(x + [k] * (rest // k), reverse=True)))
        if ok and (best is None or d < best.degree):
            best = KleinBranching(d, tuple(parts))
    if best is None:
        raise InconsistentBranchingError(f"no Klein map for {rep} over the {family} equation")
    return best


def standard_branching(family: str, degree: int) -> tuple:
    """Partitions of the degree-`degree` standard Darboux covering per standard point."""
    key, n = STANDARD_COVERINGS[family][degree]
    c = get_covering(key)
    return tuple(
        tuple(power_branching(c, n, v) if n > 1 else branching_data(c, v))
        for _, v in STANDARD_POINTS[family]
    )


def darboux_genus(rep, family: str, degree: int) -> int:
    """Genus of the fiber product of the Klein map with a standard Darboux covering."""
    psi = klein_branching(rep, family)
    phi = standard_branching(family, degree)
    ram = 0
    for psi_part, phi_part in zip(psi.partitions, phi):
        for part in fiber_product_branching(psi_part, phi_part):
            ram += sum(i - 1 for i in part)
    two_g = -2 * degree + ram + 2
    if two_g % 2:
        raise InconsistentBranchingError(f"odd Euler characteristic for {rep} at degree {degree}")
    return two_g // 2


def _column_degrees(family: str) -> list[int]:
    """Darboux degrees |G| / deg(gamma) for deg(gamma) = m, l, k, 1 (k <= l <= m)."""
    dens = sorted((k for k, _ in STANDARD_POINTS[family]), reverse=True)
    order = GROUP_ORDER[family]
    return [order // dens[0], order // dens[1], order // dens[2], order]


@dataclass(frozen=True)
class GenusRow:
    representative: tuple
    denominators: tuple
    klein_degree: int
    genera: tuple


def genus_table() -> list[GenusRow]:
    rows = []
    for st in SCHWARTZ_TYPES:
        dens = tuple(sorted(k for k, _ in STANDARD_POINTS[st.family]))
        psi = klein_branching(st.representative, st.family)
        genera = tuple(darboux_genus(st.representative, st.family, n)
                       for n in _column_degrees(st.family))
        rows.append(GenusRow(st.representative, dens, psi.degree, genera))
    return rows


# --- pull-back schemes -------------------------------------------------------------------

@dataclass(frozen=True)
class SchemePoint:
    place: object
    index: int
    exponents: tuple
    base_value: object

    @property
    def integer_difference(self) -> bool:
        return (self.exponents[1] - self.exponents[0]).denominator == 1


@dataclass(frozen=True)
class PullbackScheme:
    points: tuple
    curve: WeierstrassCurve | None
    params: HpgParams | None = None

    def support(self):
        return [p.place for p in self.points]


def _base_exponents(e) -> dict:
    if isinstance(e, HpgParams):
        e = riemann_scheme(e)
    if isinstance(e, RiemannScheme):
        return {Fraction(0): e.at_0, Fraction(1): e.at_1, INF: e.at_inf}
    return {_value(k): tuple(Fraction(q) for q in v) for k, v in dict(e).items()}


def pullback_exponents(e, c) -> PullbackScheme:
    """Local exponents r*lambda at every point above 0, 1 and infinity.

    e is a Riemann scheme (or the parameters giving one, or a mapping from
    base value to an exponent pair).  Points where the pulled-back exponents
    are exactly {0, 1} are regular and left out.
    """
    params = e if isinstance(e, HpgParams) else None
    exps = _base_exponents(e)
    f = _as_function(c)
    pts = []
    for v, lam in exps.items():
        for P, r in fiber(f, v):
            ex = tuple(r * q for q in lam)
            if sorted(ex) == [0, 1]:
                continue
            pts.append(SchemePoint(P, r, ex, v))
    return PullbackScheme(tuple(pts), f.curve, params)


def candidate_divisors(s: PullbackScheme, E: WeierstrassCurve | None = None,
                       extra_point_budget: int = 1) -> list[QDivisor]:
    """Degree-0 divisors with one local exponent at every singular point.

    Up to extra_point_budget regular Q-rational torsion points may be added
    with coefficient 1 (the exponent pair at a regular point is 0, 1).  Only
    divisors passing the torsion criterion are kept.
    """
    E = E or s.curve
    choices = [sorted(set(p.exponents)) for p in s.points]
    extras = []
    if E is not None and extra_point_budget > 0:
        taken = set(s.support())
        extras = [P for P in rational_torsion_points(E) if P not in taken]
    out = []
    seen = set()
    for pick in product(*choices):
        base = QDivisor({p.place: a for p, a in zip(s.points, pick)})
        deg = base.degree()
        for n in range(0, extra_point_budget + 1):
            if deg + n != 0:
                continue
            for add_pts in combinations(extras, n):
                D = base + QDivisor({P: 1 for P in add_pts})
                if D in seen:
                    continue
                if E is not None and not is_principal(E, D):
                    continue
                seen.add(D)
                out.append(D)
    return out
