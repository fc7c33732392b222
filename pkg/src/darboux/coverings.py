"""Registry of covering maps: standard Darboux coverings, Klein maps and phi1..phi6."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .curvefunc import CurveFunction, RadicalFunction, principal_divisor
from .elliptic import CURVES, WeierstrassCurve
from .arith import parse_rational
from .poly import RationalFunction


@dataclass(frozen=True)
class CoveringSpec:
    key: str
    curve: str | None
    constant: str
    factors: tuple  # (poly text, integer exponent)
    kind: str
    group: str | None = None  # tetrahedral / octahedral / icosahedral for standard maps


class Covering:
    """A map to the z-line, defined on the x-line or on an elliptic curve."""

    def __init__(self, spec: CoveringSpec):
        self.spec = spec
        self.key = spec.key
        self.curve: WeierstrassCurve | None = CURVES[spec.curve] if spec.curve else None
        factors = [(CurveFunction.parse(self.curve, p), e) for p, e in spec.factors]
        self.radical = RadicalFunction(self.curve, parse_rational(spec.constant), factors)

    @cached_property
    def function(self) -> CurveFunction:
        return self.radical.integral_part()

    @property
    def genus(self) -> int:
        return 0 if self.curve is None else 1

    @property
    def rational_function(self) -> RationalFunction:
        if self.curve is not None:
            raise ValueError(f"{self.key} is defined on an elliptic curve")
        return self.function.f1

    @cached_property
    def degree(self) -> int:
        if self.curve is None:
            return self.rational_function.degree()
        D = principal_divisor(self.function)
        return int(sum(a * P.degree for P, a in D.coeffs.items() if a > 0))

    def __repr__(self):
        return f"Covering({self.key!r}, degree {self.degree})"


_SPECS = [
    # standard tetrahedral coverings of H(1/2,1/3,1/3)
    CoveringSpec("tetra4", None, "1/4", (("x", 1), ("x+4", 3), ("2*x-1", -3)), "standard", "tetrahedral"),
    CoveringSpec("tetra6", None, "1", (("x^2-6*x-3", 3), ("x^2+6*x-3", -3)), "standard", "tetrahedral"),
    CoveringSpec("tetra12", None, "1/4", (("x^3", 1), ("x^3+4", 3), ("2*x^3-1", -3)), "standard", "tetrahedral"),
    # standard octahedral coverings of H(1/2,1/3,1/4)
    CoveringSpec("octa6", None, "27/2", (("x", 1), ("x+1", 4), ("x^2+4*x+1", -3)), "standard", "octahedral"),
    CoveringSpec("octa8", None, "1/256", (("x^2+20*x-8", 4), ("x", -1), ("x+1", -3), ("x-8", -3)), "standard", "octahedral"),
    CoveringSpec("octa12", None, "27", (("x-1", 4), ("x^2+6*x+1", 4), ("x^2-10*x+1", -3), ("3*x^2+2*x+3", -3)), "standard", "octahedral"),
    # standard icosahedral coverings of H(1/2,1/3,1/5)
    CoveringSpec("icosa12", None, "1728", (("x", 1), ("x^2-11*x-1", 5), ("x^4+228*x^3+494*x^2-228*x+1", -3)), "standard", "icosahedral"),
    CoveringSpec("icosa20", None, "64/125", (("x^4+55*x^3-165*x^2-275*x+25", 5), ("x", -1), ("x^2+5*x+40", -3), ("x^2-40*x-5", -3), ("8*x^2-5*x+5", -3)), "standard", "icosahedral"),
    CoveringSpec("icosa30", None, "27", (("x^2+2*x+5", 5), ("x^4+20*x^3-210*x^2+100*x+25", 5), ("3*x^2-10*x+15", -3), ("x^4+70*x^2+25", -3), ("x^4-60*x^3-370*x^2-300*x+25", -3)), "standard", "icosahedral"),
    # Klein maps onto three icosahedral main representatives
    CoveringSpec("klein-1/2-1/3-2/5", None, "1", (("x^2", 1), ("189-64*x", 5), ("3584*x^2+2457*x-2916", -3)), "klein"),
    CoveringSpec("klein-1/3-2/3-1/5", None, "4/27", (("x", 1), ("25*x-9", 5), ("x-1", -1), ("125*x+3", -3)), "klein"),
    CoveringSpec("klein-1/3-2/5-3/5", None, "3125/4", (("x^2", 1), ("x-1", 3), ("5*x+27", 5), ("625*x^3-2875*x^2+675*x-729", -3)), "klein"),
    # coverings used by the tetrahedral and octahedral catalog records
    CoveringSpec("tetra4b", None, "1", (("x", 1), ("x+2", 3), ("2*x+1", -3)), "record"),
    CoveringSpec("octa6b", None, "108", (("x", 1), ("x-1", 4), ("x^2+14*x+1", -3)), "record"),
    # icosahedral Darboux coverings of minimal degree
    CoveringSpec("phi1", None, "1728", (("x", 1), ("x^2-11*x-1", 5), ("x^4+228*x^3+494*x^2-228*x+1", -3)), "darboux"),
    CoveringSpec("phi2", None, "64", (("x", 1), ("x^2-x-1", 5), ("x^2-1", -1), ("x^2+4*x-1", -5)), "darboux"),
    CoveringSpec("phi3", "E3", "144", (("xi", 1), ("1+33*x-9*x^2", 2), ("1-9*xi+54*x", 1), ("1+21*xi-117*x+9*x*xi-234*x^2", -3)), "darboux"),
    CoveringSpec("phi4", "E4", "432", (("x", 1), ("1-7/5*xi-9*x-x^2", 5), ("1+50*x-125*xi^2+450*x*xi-500*x^2", 1), ("5*xi+57*x", -1), ("1+18/5*xi-16*x+x^2", -5), ("1+50*x-125*xi^2-450*x*xi-500*x^2", -1)), "darboux"),
    CoveringSpec("phi5", "E5", "-54", (("xi+5*x", 3), ("1-2*xi+6*x", 5), ("1-16*x^2", -1), ("xi-5*x", -2), ("1-2*xi-14*x", -5)), "darboux"),
    CoveringSpec("phi6", "E6", "16", (("xi", 1), ("1+x-x^2", 2), ("1-xi", 2), ("1+xi+2*x", -1), ("1+xi-2*x", -5)), "darboux"),
]

COVERING_SPECS = {s.key: s for s in _SPECS}
_CACHE: dict[str, Covering] = {}


def get_covering(key: str) -> Covering:
    if key not in COVERING_SPECS:
        raise KeyError(f"unknown covering {key!r}")
    if key not in _CACHE:
        _CACHE[key] = Covering(COVERING_SPECS[key])
    return _CACHE[key]


def covering_keys(kind: str | None = None) -> list[str]:
    return [s.key for s in _SPECS if kind is None or s.kind == kind]


# Alternative closed forms of phi3 on E3, compared as exact function-field identities.

def phi3_fiber_product_form() -> CurveFunction:
    """phi3 as 2 / (1 + (9x^2+1)(81x^4-14094x^3-90054x^2+1566x+1) / (72 xi (9x^2-33x-1)^2))."""
    E = CURVES["E3"]
    num = CurveFunction.parse(E, "(9*x^2+1)*(81*x^4-14094*x^3-90054*x^2+1566*x+1)")
    den = CurveFunction.parse(E, "72*xi*(9*x^2-33*x-1)^2")
    return 2 / (1 + num / den)


def one_minus_phi3_closed_form() -> CurveFunction:
    """(1-21xi-117x-9x xi-234x^2)^3 (1-9xi+54x) / ((1+21xi-117x+9x xi-234x^2)^3 (1+9xi+54x))."""
    E = CURVES["E3"]
    num = CurveFunction.parse(E, "(1-21*xi-117*x-9*x*xi-234*x^2)^3*(1-9*xi+54*x)")
    den = CurveFunction.parse(E, "(1+21*xi-117*x+9*x*xi-234*x^2)^3*(1+9*xi+54*x)")
    return num / den
