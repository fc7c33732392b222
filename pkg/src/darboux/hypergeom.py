"""Gauss hypergeometric series, local exponents and Schwartz types."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .errors import ParameterError
from .poly import Poly, RationalFunction
from .series import PuiseuxSeries


def _nonpositive_integer(q: Fraction) -> bool:
    return q.denominator == 1 and q <= 0


@dataclass(frozen=True)
class HpgParams:
    A: Fraction
    B: Fraction
    C: Fraction

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if _nonpositive_integer(self.C):
            raise ParameterError(f"C = {self.C} is a non-positive integer")

    def as_tuple(self):
        return (self.A, self.B, self.C)

    def shifted(self, k: int, l: int, m: int) -> "HpgParams":
        return HpgParams(self.A + k, self.B + l, self.C + m)

    def swapped(self) -> "HpgParams":
        return HpgParams(self.B, self.A, self.C)


@dataclass(frozen=True)
class ExponentDiffs:
    e0: Fraction
    e1: Fraction
    e_inf: Fraction

    def __post_init__(self):
        for name in ("e0", "e1", "e_inf"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def as_tuple(self):
        return (self.e0, self.e1, self.e_inf)


@dataclass(frozen=True)
class RiemannScheme:
    at_0: tuple
    at_1: tuple
    at_inf: tuple

    def fuchs_sum(self) -> Fraction:
        return sum(self.at_0) + sum(self.at_1) + sum(self.at_inf)


def exponent_diffs(p: HpgParams) -> ExponentDiffs:
    return ExponentDiffs(1 - p.C, p.C - p.A - p.B, p.A - p.B)


def params_from_diffs(e: ExponentDiffs) -> HpgParams:
    """The inverse dictionary: A=(1-e0-e1+e_inf)/2, B=(1-e0-e1-e_inf)/2, C=1-e0."""
    A = (1 - e.e0 - e.e1 + e.e_inf) / 2
    B = (1 - e.e0 - e.e1 - e.e_inf) / 2
    return HpgParams(A, B, 1 - e.e0)


def riemann_scheme(p: HpgParams) -> RiemannScheme:
    return RiemannScheme(
        (Fraction(0), 1 - p.C),
        (Fraction(0), p.C - p.A - p.B),
        (p.A, p.B),
    )


def hypergeometric_coefficients(A, B, C, n: int) -> list[Fraction]:
    """First n coefficients (A)_k (B)_k / ((C)_k k!)."""
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    if _nonpositive_integer(C):
        raise ParameterError(f"C = {C} is a non-positive integer")
    out = []
    c = Fraction(1)
    for k in range(n):
        out.append(c)
        c = c * (A + k) * (B + k) / ((C + k) * (k + 1))
    return out


def gauss_series(p: HpgParams, order: int) -> PuiseuxSeries:
    """Series of 2F1(A,B;C;z) known through z**order."""
    if order < 0:
        raise ParameterError("order must be non-negative")
    coeffs = hypergeometric_coefficients(p.A, p.B, p.C, order + 1)
    return PuiseuxSeries(coeffs, 0, 1, order + 1)


def second_solution_series(p: HpgParams, order: int) -> PuiseuxSeries:
    """z^(1-C) 2F1(A+1-C, B+1-C; 2-C; z) with terms through z^(1-C+order)."""
    if _nonpositive_integer(2 - p.C):
        raise ParameterError(f"2 - C = {2 - p.C} is a non-positive integer")
    coeffs = hypergeometric_coefficients(p.A + 1 - p.C, p.B + 1 - p.C, 2 - p.C, order + 1)
    lead = 1 - p.C
    r = lead.denominator
    spread = []
    for i, c in enumerate(coeffs):
        if i:
            spread.extend([0] * (r - 1))
        spread.append(c)
    return PuiseuxSeries(spread, lead.numerator, r, lead + order + 1)


def is_logarithmic_at_zero(p: HpgParams) -> bool:
    """True when 1-C is an integer: the two local solutions are not both power series."""
    return (1 - p.C).denominator == 1


def normalized_potential(e: ExponentDiffs) -> RationalFunction:
    """r(z) of the normalized equation y'' = r(z) y."""
    z = Poly.gen("z")
    one = Poly.const(1, "z")
    zm1 = z - one
    t1 = RationalFunction(Poly.const((e.e1 ** 2 - 1) / 4, "z"), zm1 * zm1)
    t0 = RationalFunction(Poly.const((e.e0 ** 2 - 1) / 4, "z"), z * z)
    tc = RationalFunction(Poly.const((1 + e.e_inf ** 2 - e.e0 ** 2 - e.e1 ** 2) / 4, "z"), z * zm1)
    return t1 + t0 + tc


# --- Schwartz types --------------------------------------------------------

@dataclass(frozen=True)
class SchwartzType:
    label: str
    family: str  # cyclic, dihedral, tetrahedral, octahedral, icosahedral, none
    representative: tuple | None = None

    @property
    def is_algebraic(self) -> bool:
        return self.family != "none"

    def __str__(self):
        return self.label


def _t(*qs):
    return tuple(Fraction(q) for q in qs)


def _label(prefix, rep):
    return prefix + "-" + "-".join(str(q) for q in rep)


MAIN_REPRESENTATIVES = [
    ("Tetra-233", "tetrahedral", _t("1/2", "1/3", "1/3")),
    (None, "tetrahedral", _t("1/3", "1/3", "2/3")),
    ("Octa-234", "octahedral", _t("1/2", "1/3", "1/4")),
    (None, "octahedral", _t("2/3", "1/4", "1/4")),
    ("Icosa-235", "icosahedral", _t("1/2", "1/3", "1/5")),
    (None, "icosahedral", _t("1/2", "1/3", "2/5")),
    (None, "icosahedral", _t("1/2", "1/5", "2/5")),
    (None, "icosahedral", _t("1/3", "1/3", "2/5")),
    (None, "icosahedral", _t("1/3", "2/3", "1/5")),
    (None, "icosahedral", _t("2/3", "1/5", "1/5")),
    (None, "icosahedral", _t("1/3", "2/5", "3/5")),
    (None, "icosahedral", _t("1/3", "1/5", "3/5")),
    (None, "icosahedral", _t("1/5", "1/5", "4/5")),
    (None, "icosahedral", _t("2/5", "2/5", "2/5")),
]

_PREFIX = {"tetrahedral": "Tetra", "octahedral": "Octa", "icosahedral": "Icosa"}

SCHWARTZ_TYPES = [
    SchwartzType(lab or _label(_PREFIX[fam], rep), fam, rep)
    for lab, fam, rep in MAIN_REPRESENTATIVES
]
CYCLIC = SchwartzType("Cyclic", "cyclic")
DIHEDRAL = SchwartzType("Dihedral", "dihedral")
NON_ALGEBRAIC = SchwartzType("NonAlgebraic", "none")


def type_by_representative(rep) -> SchwartzType:
    rep = tuple(Fraction(q) for q in rep)
    for st in SCHWARTZ_TYPES:
        if st.representative == rep:
            return st
    raise KeyError(f"no main representative {rep}")


def _is_reducible(e) -> bool:
    for s1, s2 in product((1, -1), repeat=2):
        v = e[0] + s1 * e[1] + s2 * e[2]
        if v.denominator == 1 and v.numerator % 2:
            return True
    return False


def matches_representative(e, rep) -> bool:
    """Equivalence under permutation, sign changes and integer shifts of even sum."""
    e = tuple(Fraction(q) for q in e)
    for perm in permutations(range(3)):
        for signs in product((1, -1), repeat=3):
            shifts = [signs[i] * e[i] - rep[perm[i]] for i in range(3)]
            if all(d.denominator == 1 for d in shifts) and sum(shifts) % 2 == 0:
                return True
    return False


def classify_schwartz(e) -> SchwartzType:
    if isinstance(e, ExponentDiffs):
        e = e.as_tuple()
    e = tuple(Fraction(q) for q in e)
    if _is_reducible(e):
        return CYCLIC
    halves = sum(1 for q in e if (q - Fraction(1, 2)).denominator == 1)
    if halves >= 2:
        return DIHEDRAL
    for st in SCHWARTZ_TYPES:
        if matches_representative(e, st.representative):
            return st
    return NON_ALGEBRAIC
