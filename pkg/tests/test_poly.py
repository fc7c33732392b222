from fractions import Fraction as F

from hypothesis import given, strategies as st

from darboux.bipoly import format_bipoly, parse_bipoly
from darboux.poly import Poly, RationalFunction, factor_rational, poly_gcd, rational_roots

coeff = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(coeff, min_size=1, max_size=7).map(Poly)


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_division_identity(f, g):
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@given(polys, polys, polys)
def test_gcd_divides_common_factor(f, g, h):
    if h.is_zero() or (f.is_zero() and g.is_zero()):
        return
    d = poly_gcd(f * h, g * h)
    assert (f * h).divmod(d)[1].is_zero()
    assert h.divmod(d)[1].is_zero() or d.degree >= h.degree


def test_large_gcd_matches_euclid():
    h = Poly([F(1, 3), 5, -2, 7, 1])
    f = Poly([1, 2, 3, 4, 5, 6]) * h
    g = Poly([F(-1, 2), 0, 3, 1, 1]) * h
    assert poly_gcd(f, g) == h.monic()


def test_factor_rational():
    x = Poly.gen()
    lc, facs = factor_rational((x - 1) ** 2 * (x * x + 1) * 3)
    assert lc == 3
    assert facs == [(x - 1, 2), (x * x + 1, 1)]
    assert sorted(rational_roots(Poly([-1, 0, 4]))) == [F(-1, 2), F(1, 2)]


def test_rational_function_lowest_terms():
    x = Poly.gen("z")
    r = RationalFunction((x - 1) * (x + 2), (x - 1) * 2)
    assert r.num == (x + 2) * F(1, 2)
    assert r.den == Poly.const(1, "z")


def test_bipoly_round_trip_examples():
    for text in ("1+21*xi-117*x+9*x*xi-234*x^2", "1-34/5*x-3/5*xi", "xi", "25-570*xi+248*x+xi^2-380*x^2"):
        printed = format_bipoly(parse_bipoly(text))
        assert parse_bipoly(printed) == parse_bipoly(text)
        assert format_bipoly(parse_bipoly(printed)) == printed


@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 2)), coeff, max_size=6))
def test_bipoly_print_parse(terms):
    text = "+".join(f"({c})*x^{i}*xi^{j}" for (i, j), c in terms.items()) or "0"
    p = parse_bipoly(text)
    assert parse_bipoly(format_bipoly(p)) == p
