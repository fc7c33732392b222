"""Tables of principal divisors of small functions on E3, E4, E5 and E6.

Each row pairs a polynomial in x, xi with its divisor written in terms of
named closed points.  Names resolve to rational points or to conjugate
components (irreducible x-polynomial plus xi as a polynomial in x).  A
leading "~" denotes the inverse point (or the conjugate component).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curvefunc import CurveFunction, principal_divisor
from .elliptic import (INFINITY, Component, CurvePoint, QDivisor, e4_named_point, get_curve,
                       make_component)
from .bipoly import parse_bipoly


def _component(curve: str, p: str, q: str):
    E = get_curve(curve)
    return make_component(E, parse_bipoly(p).to_poly(), parse_bipoly(q).to_poly())


# Conjugate components that appear in the tables, keyed by curve and name.
COMPONENT_DEFS = {
    "E3": {
        "W": ("9*x^2-33*x-1", "0"),
        "R": ("81*x^4+6156*x^3+4446*x^2-684*x+1", "27/150*x^3+1989/150*x^2+741/150*x-7/150"),
    },
    "E4": {
        "P": ("5*x^2+15*x-1", "4/7-30/7*x"),
        "Q": ("5*x^2+40*x-1", "20/3*x-1/3"),
        "R": ("x^4+100*x^3-498/5*x^2-20*x+1/25", "5/114+83/190*x-25/38*x^2-1/114*x^3"),
    },
    "E5": {
        "P": ("16*x^2+12*x+1", "1/2+3*x"),
        "Q": ("16*x^2-28*x+1", "1/2-7*x"),
        "R": ("x^4-29/4*x^3-69/16*x^2-29/64*x+1/256", "-2/15+23/5*x+88/5*x^2-32/15*x^3"),
    },
    "E6": {
        "P": ("x^2-x-1", "0"),
        "Q": ("x^2+4*x-1", "2*x-1"),
        "R": ("x^2+4*x-1", "1-2*x"),
    },
}


def resolve(curve: str, name: str):
    """Closed point for a table name on the given curve."""
    E = get_curve(curve)
    if name == "O":
        return INFINITY
    if name.startswith("("):
        xs, ys = name.strip("()").split(",")
        return E.point(Fraction(xs), Fraction(ys))
    neg = name.startswith("~")
    base = name[1:] if neg else name
    if curve == "E4" and base != "O*" and base[0] == "A":
        star = base.startswith("A*")
        n = int(base[2:] if star else base[1:])
        kind = ("~" if neg else "") + ("A*" if star else "A")
        return e4_named_point(kind, n)
    if curve == "E4" and base == "O*":
        return CurvePoint(0, 0)
    p, q = COMPONENT_DEFS[curve][base]
    c = _component(curve, p, q)
    if neg:
        c = c.conjugate() if isinstance(c, Component) else -c
    return c


def named_divisor(curve: str, terms) -> QDivisor:
    """QDivisor from [(coefficient, name), ...]."""
    D = QDivisor()
    for a, name in terms:
        D = D + QDivisor.point(resolve(curve, name), a)
    return D


@dataclass(frozen=True)
class TableRow:
    curve: str
    function: str
    divisor: tuple  # ((coefficient, name), ...)

    def curve_function(self) -> CurveFunction:
        return CurveFunction.parse(get_curve(self.curve), self.function)

    def expected(self) -> QDivisor:
        return named_divisor(self.curve, self.divisor)

    def computed(self) -> QDivisor:
        return principal_divisor(self.curve_function())


def _rows(curve, entries):
    return [TableRow(curve, f, tuple(d)) for f, d in entries]


_M4 = "(-1/9,-5/9)"
_P4 = "(-1/9,5/9)"

TABLE_E3 = _rows("E3", [
    ("xi", [(1, "(0,0)"), (1, "W"), (-3, "O")]),
    ("1+33*x-9*x^2", [(2, "W"), (-4, "O")]),
    ("1-9*xi+54*x", [(3, _M4), (-3, "O")]),
    ("1+9*xi+54*x", [(3, _P4), (-3, "O")]),
    ("1+9*x", [(1, _M4), (1, _P4), (-2, "O")]),
    ("xi+5*x", [(1, "(0,0)"), (1, _P4), (1, "(1,-5)"), (-3, "O")]),
    ("1+21*xi-117*x+9*x*xi-234*x^2", [(1, "R"), (1, _M4), (-5, "O")]),
    ("1-21*xi-117*x-9*x*xi-234*x^2", [(1, "~R"), (1, _P4), (-5, "O")]),
])

TABLE_E4 = _rows("E4", [
    ("x", [(2, "O*"), (-2, "O")]),
    ("1-5*x", [(1, "A1"), (1, "~A1"), (-2, "O")]),
    ("25+x", [(1, "A*5"), (1, "~A*5"), (-2, "O")]),
    ("1-125*x", [(1, "A5"), (1, "~A5"), (-2, "O")]),
    ("5*xi+57*x", [(1, "A*5"), (1, "~A5"), (1, "O*"), (-3, "O")]),
    ("-5*xi+57*x", [(1, "~A*5"), (1, "A5"), (1, "O*"), (-3, "O")]),
    ("1+5*xi+10*x", [(2, "~A1"), (1, "A2"), (-3, "O")]),
    ("1-3*xi+2*x", [(1, "A2"), (1, "A*2"), (1, "~A*4"), (-3, "O")]),
    ("4+21*xi+41*x", [(1, "A2"), (1, "A*4"), (1, "~A*6"), (-3, "O")]),
    ("5-3*xi-34*x", [(1, "A*5"), (1, "~A*4"), (1, "~A1"), (-3, "O")]),
    ("1-15*x-5*x^2", [(1, "P"), (1, "~P"), (-4, "O")]),
    ("1-40*x-5*x^2", [(1, "Q"), (1, "~Q"), (-4, "O")]),
    ("5-7*xi-45*x-5*x^2", [(1, "P"), (1, "~A*5"), (1, "~A1"), (-4, "O")]),
    ("5+18*xi-80*x+5*x^2", [(1, "Q"), (1, "~A*5"), (1, "A1"), (-4, "O")]),
    ("1-7*xi+15*x+15*x^2", [(1, "P"), (1, "~A*4"), (1, "~A2"), (-4, "O")]),
    ("4-7*xi-30*x", [(1, "P"), (1, "~A*6"), (-3, "O")]),
    ("1+3*xi-20*x", [(1, "Q"), (1, "~A*4"), (-3, "O")]),
    ("1-8*xi+22*x-15*x^2", [(2, "A1"), (1, "A*2"), (1, "~A*4"), (-4, "O")]),
    ("4-35*xi-101*x", [(1, "A*1"), (1, "A5"), (1, "~A*6"), (-3, "O")]),
    ("20-7*xi-79*x", [(1, "A1"), (1, "A*5"), (1, "~A*6"), (-3, "O")]),
    ("1+50*x-125*xi^2+450*x*xi-500*x^2", [(5, "A1"), (1, "~A5"), (-6, "O")]),
    ("1+50*x-125*xi^2-450*x*xi-500*x^2", [(5, "~A1"), (1, "A5"), (-6, "O")]),
    ("25-570*xi+248*x+xi^2-380*x^2", [(1, "R"), (2, "~A*5"), (-6, "O")]),
    ("4+95*xi+83*x+21*xi^2-475*x*xi+40*x^2", [(1, "R"), (1, "~A*6"), (1, "~A*4"), (-6, "O")]),
])

TABLE_E5 = _rows("E5", [
    ("xi+5*x", [(2, "(1/4,-5/4)"), (1, "(0,0)"), (-3, "O")]),
    ("xi-5*x", [(2, "(1/4,5/4)"), (1, "(0,0)"), (-3, "O")]),
    ("xi+3*x", [(2, "(-1/4,3/4)"), (1, "(0,0)"), (-3, "O")]),
    ("xi-3*x", [(2, "(-1/4,-3/4)"), (1, "(0,0)"), (-3, "O")]),
    ("1+xi+x", [(1, "(-1/4,-3/4)"), (1, "(1/4,-5/4)"), (1, "(-1,0)"), (-3, "O")]),
    ("1-2*xi+6*x", [(1, "P"), (1, "(1/4,5/4)"), (-3, "O")]),
    ("1+12*x+16*x^2", [(1, "P"), (1, "~P"), (-4, "O")]),
    ("1-2*xi-14*x", [(1, "Q"), (1, "(1/4,-5/4)"), (-3, "O")]),
    ("1-28*x+16*x^2", [(1, "Q"), (1, "~Q"), (-4, "O")]),
    ("1+8*xi-28*x+8*x*xi-104*x^2", [(1, "R"), (1, "(1/4,5/4)"), (-5, "O")]),
])

TABLE_E6 = _rows("E6", [
    ("xi", [(1, "(0,0)"), (1, "P"), (-3, "O")]),
    ("1-xi", [(1, "(-1,1)"), (2, "(1,1)"), (-3, "O")]),
    ("1+xi", [(1, "(-1,-1)"), (2, "(1,-1)"), (-3, "O")]),
    ("1+xi+2*x", [(3, "(-1,1)"), (-3, "O")]),
    ("1-xi+2*x", [(3, "(-1,-1)"), (-3, "O")]),
    ("1+x-x^2", [(2, "P"), (-4, "O")]),
    ("1-4*x-x^2", [(1, "Q"), (1, "R"), (-4, "O")]),
    ("xi+2*x+x^2", [(1, "(0,0)"), (1, "Q"), (-3, "O")]),
    ("1+xi-2*x", [(1, "Q"), (1, "(1,1)"), (-3, "O")]),
    ("1-xi-2*x", [(1, "R"), (1, "(1,-1)"), (-3, "O")]),
])

DIVISOR_TABLES = {"E3": TABLE_E3, "E4": TABLE_E4, "E5": TABLE_E5, "E6": TABLE_E6}


def table_functions(curve: str, with_conjugates: bool = True):
    """(CurveFunction, divisor) pairs from a curve's table, closed under xi -> -xi."""
    out = []
    seen = set()
    for row in DIVISOR_TABLES[curve]:
        f = row.curve_function()
        cands = [f, f.conjugate()] if with_conjugates else [f]
        for g in cands:
            if g in seen:
                continue
            seen.add(g)
            out.append((g, principal_divisor(g)))
    return out
