from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from darboux.errors import ParameterError
from darboux.hypergeom import (SCHWARTZ_TYPES, HpgParams, classify_schwartz, exponent_diffs,
                               gauss_series, params_from_diffs, riemann_scheme,
                               second_solution_series)


def test_gauss_coefficients():
    s = gauss_series(HpgParams(F(1, 4), F(-1, 12), F(2, 3)), 3)
    assert [s.coefficient(k) for k in range(3)] == [1, F(-1, 32), F(-11, 1024)]


def test_gauss_terminates_for_negative_integer():
    s = gauss_series(HpgParams(-2, 1, F(1, 2)), 6)
    assert [s.coefficient(k) for k in range(5)] == [1, -4, F(8, 3), 0, 0]


def test_c_nonpositive_integer_rejected():
    with pytest.raises(ParameterError):
        HpgParams(1, 1, -2)


def test_exponent_differences():
    e = exponent_diffs(HpgParams(F(1, 4), F(-1, 12), F(2, 3)))
    assert e.as_tuple() == (F(1, 3), F(1, 2), F(1, 3))
    assert params_from_diffs(e) == HpgParams(F(1, 4), F(-1, 12), F(2, 3))


def test_fuchs_relation():
    assert riemann_scheme(HpgParams(F(3, 10), F(-1, 30), F(3, 5))).fuchs_sum() == 1


def test_classification_examples():
    assert classify_schwartz((F(1, 2), F(1, 3), F(1, 3))).label == "Tetra-233"
    assert classify_schwartz((F(1, 3), F(1, 3), F(2, 5))).family == "icosahedral"
    assert classify_schwartz((F(1, 2), F(1, 2), F(1, 7))).family == "dihedral"
    assert classify_schwartz((F(1, 2), F(1, 3), F(1, 7))).family == "none"
    assert classify_schwartz((F(1, 2), F(1, 3), F(7, 6))).family == "cyclic"
    assert len(SCHWARTZ_TYPES) == 14


signs = st.tuples(*(st.sampled_from((1, -1)),) * 3)
shifts = st.tuples(*(st.integers(-3, 3),) * 3).filter(lambda s: sum(s) % 2 == 0)


@given(st.sampled_from(SCHWARTZ_TYPES), st.permutations(range(3)), signs, shifts)
def test_classification_invariant(t, perm, sg, sh):
    rep = t.representative
    e = tuple(sg[i] * rep[perm[i]] + sh[i] for i in range(3))
    assert classify_schwartz(e) == t


def test_second_solution_leading_exponent():
    s = second_solution_series(HpgParams(F(3, 10), F(-1, 30), F(3, 5)), 4)
    assert s.valuation == F(2, 5)
    assert s.leading_coefficient() == 1
