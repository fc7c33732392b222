from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from darboux.curvefunc import (CurveFunction, RadicalFunction, expand_at_base, normalized_expansion,
                               principal_divisor, radical_divisor, valuation_at)
from darboux.divisor_tables import DIVISOR_TABLES
from darboux.elliptic import INFINITY, get_curve

E3 = get_curve("E3")
E6 = get_curve("E6")


def test_xi_squared_is_the_cubic():
    xi = CurveFunction.xi(E3)
    assert xi * xi == CurveFunction(E3, E3.G)


def test_inverse():
    f = CurveFunction.parse(E6, "1+xi")
    assert f * f.inverse() == CurveFunction(E6, 1)
    with pytest.raises(ZeroDivisionError):
        CurveFunction(E6, 0).inverse()


def test_valuations_at_special_points():
    x, xi = CurveFunction.x(E3), CurveFunction.xi(E3)
    O0 = E3.point(0, 0)
    assert valuation_at(xi, O0) == 1
    assert valuation_at(x, O0) == 2
    assert valuation_at(x, INFINITY) == -2
    assert valuation_at(xi, INFINITY) == -3


def test_principal_divisors_have_degree_zero():
    for table in DIVISOR_TABLES.values():
        for row in table:
            assert principal_divisor(row.curve_function()).degree() == 0


rows = [row for table in DIVISOR_TABLES.values() for row in table]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(rows), st.sampled_from(rows), st.integers(-2, 2))
def test_divisor_is_a_homomorphism(r1, r2, n):
    if r1.curve != r2.curve:
        return
    f, g = r1.curve_function(), r2.curve_function()
    assert principal_divisor(f * g) == principal_divisor(f) + principal_divisor(g)
    assert principal_divisor(f ** n) == principal_divisor(f).scale(n)


def test_radical_divisor_is_weighted_sum():
    f = CurveFunction.parse(E3, "1-9*xi+54*x")
    g = CurveFunction.parse(E3, "1+21*xi-117*x+9*x*xi-234*x^2")
    r = RadicalFunction(E3, 1, [(f, F(1, 30)), (g, F(-1, 10))])
    assert radical_divisor(r) == principal_divisor(f).scale(F(1, 30)) - principal_divisor(g).scale(F(1, 10))


def test_expansion_in_sqrt_x():
    xi = expand_at_base(CurveFunction.xi(E3), 5)
    # xi = t sqrt(1 + 33 t^2 - 9 t^4), t = x^(1/2)
    assert xi.coefficient(F(1, 2)) == 1
    assert xi.coefficient(F(3, 2)) == F(33, 2)


def test_genus_zero_expansion():
    s = expand_at_base(RadicalFunction(None, 1, [(CurveFunction.parse(None, "1-2*x"), F(-1, 4))]), 2)
    assert [s.coefficient(k) for k in range(3)] == [1, F(1, 2), F(5, 8)]


def test_normalized_expansion_drops_constant():
    v, u = normalized_expansion(CurveFunction.parse(E3, "3*xi"), 4)
    assert v == 1
    assert u.coefficient(0) == 1


def test_conjugation_branch():
    f = CurveFunction.parse(E3, "xi+5*x")
    plus = expand_at_base(f, 6, 1)
    minus = expand_at_base(f.conjugate(), 6, -1)
    assert plus.agrees(minus)
