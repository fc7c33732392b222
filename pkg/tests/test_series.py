from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from darboux.errors import CompositionDivergence
from darboux.series import PuiseuxSeries, series_compose

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=5)
units = st.lists(coeff, min_size=1, max_size=8).map(lambda cs: PuiseuxSeries([1] + cs, 0, 1, len(cs) + 1))
exponents = st.fractions(min_value=-3, max_value=3, max_denominator=6).filter(lambda q: q != 0)


@given(units)
def test_inverse_round_trip(s):
    one = PuiseuxSeries((1,), 0, 1, s.prec)
    assert (s * s.inverse()).agrees(one)


@settings(deadline=None)
@given(units, exponents)
def test_power_round_trip(s, e):
    assert s.pow(e).pow(1 / e).agrees(s)


@settings(deadline=None)
@given(units, exponents, exponents)
def test_power_multiplicative(s, a, b):
    assert (s.pow(a) * s.pow(b)).agrees(s.pow(a + b))


def test_binomial_series():
    s = PuiseuxSeries((1, -2), 0, 1, 6).pow(F(-1, 4))
    assert [s.coefficient(k) for k in range(3)] == [1, F(1, 2), F(5, 8)]


def test_composition_with_geometric_series():
    geo = PuiseuxSeries([1] * 8, 0, 1, 8)        # 1/(1-z)
    inner = PuiseuxSeries((0, 1, 1), 0, 1, 8)    # x + x^2
    direct = PuiseuxSeries((1, -1, -1), 0, 1, 8).inverse()
    assert series_compose(geo, inner).agrees(direct)


def test_puiseux_exponents():
    t = PuiseuxSeries.monomial(1, F(1, 2), 4)
    assert (t * t).agrees(PuiseuxSeries.monomial(1, 1, 4))
    assert t.valuation == F(1, 2)


def test_compose_needs_positive_valuation():
    geo = PuiseuxSeries([1] * 4, 0, 1, 4)
    with pytest.raises(CompositionDivergence):
        series_compose(geo, PuiseuxSeries((1, 1), 0, 1, 4))
