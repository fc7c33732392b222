from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from darboux.contiguous import (ShiftVector, derivative_as_contiguous, express_in_basis,
                                express_in_basis_any_order, relation_b_up, relation_c_down)
from darboux.errors import PathDegeneracyError
from darboux.hypergeom import HpgParams, gauss_series

generic = st.fractions(min_value=-4, max_value=4, max_denominator=13).filter(lambda q: q.denominator > 1)
shift = st.tuples(*(st.integers(-2, 2),) * 3)


def _agrees(expr, A, B, C, target, order=10):
    return expr.series(A, B, C, order).agrees(gauss_series(target, order))


def test_single_relations():
    A, B, C = F(1, 4), F(-1, 12), F(2, 3)
    assert _agrees(relation_b_up(A, B, C), A, B, C, HpgParams(A, B + 1, C))
    assert _agrees(relation_c_down(A, B, C), A, B, C, HpgParams(A, B, C - 1))


def test_zero_shift_is_identity():
    e = express_in_basis(F(1, 3), F(1, 5), F(2, 7), (0, 0, 0))
    assert e.p == 1 and e.q == 0


@settings(max_examples=50, deadline=None)
@given(generic, generic, generic, shift)
def test_random_shifts_match_series(A, B, C, s):
    assume((C - A).denominator > 1 and (C - B).denominator > 1)
    expr = express_in_basis(A, B, C, ShiftVector(*s))
    assert _agrees(expr, A, B, C, HpgParams(A + s[0], B + s[1], C + s[2]))


def test_degenerate_path_is_an_error():
    with pytest.raises(PathDegeneracyError):
        express_in_basis(-1, F(1, 3), F(1, 2), (2, 0, 0))


def test_any_order():
    A, B, C = F(1, 3), F(2, 5), F(1, 7)
    expr, swapped = express_in_basis_any_order(A, B, C, (1, -1, 1))
    assert not swapped
    assert _agrees(expr, A, B, C, HpgParams(A + 1, B - 1, C + 1))
    # both orders pass through a zero parameter: the error propagates
    with pytest.raises(PathDegeneracyError):
        express_in_basis_any_order(-1, -1, F(1, 2), (2, 2, 0))


def test_derivative():
    A, B, C = F(3, 10), F(-1, 30), F(3, 5)
    d = derivative_as_contiguous(A, B, C)
    lhs = d.series(A, B, C, 8)
    rhs = gauss_series(HpgParams(A + 1, B + 1, C + 1), 9) * (A * B / C)
    assert lhs.agrees(rhs, 8)
