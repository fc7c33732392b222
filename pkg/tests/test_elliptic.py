from fractions import Fraction as F

from hypothesis import given, strategies as st

from darboux.elliptic import (CURVES, INFINITY, RATIONAL_POINTS, QDivisor, add, e4_named_point,
                              get_curve, is_principal, multiply, negate, on_curve, order_of,
                              rational_torsion_points)

E4 = get_curve("E4")


def test_listed_points_lie_on_their_curves():
    for name, pts in RATIONAL_POINTS.items():
        for P in pts:
            assert P.is_infinity or on_curve(get_curve(name), P)


def test_e3_torsion_orders():
    E = get_curve("E3")
    assert order_of(E, E.point(0, 0)) == 2
    assert order_of(E, E.point(F(-1, 9), F(5, 9))) == 3
    assert order_of(E, E.point(1, 5)) == 6


def test_rational_torsion_search():
    assert len(rational_torsion_points(get_curve("E3"))) == 6
    assert len(rational_torsion_points(get_curve("E5"))) == 8
    assert set(rational_torsion_points(E4)) == {INFINITY, E4.point(0, 0)}


def test_e4_named_points():
    A = e4_named_point("A", 1)
    assert A == E4.point(F(1, 5), F(3, 5))
    assert e4_named_point("~A", 2) == negate(E4, multiply(E4, 2, A))
    assert e4_named_point("A*", 1) == add(E4, A, E4.point(0, 0))
    assert order_of(E4, A, 16) is None


points_e4 = st.integers(-6, 6).map(lambda n: multiply(E4, n, e4_named_point("A", 1)))


@given(points_e4, points_e4, points_e4)
def test_group_law_on_multiples_of_a(P, Q, R):
    assert add(E4, P, Q) == add(E4, Q, P)
    assert add(E4, add(E4, P, Q), R) == add(E4, P, add(E4, Q, R))
    assert add(E4, P, negate(E4, P)) == INFINITY


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_multiplication_is_additive(m, n):
    A = e4_named_point("A", 1)
    assert multiply(E4, m + n, A) == add(E4, multiply(E4, m, A), multiply(E4, n, A))


def test_principality_criterion():
    E = get_curve("E3")
    T = E.point(F(-1, 9), F(-5, 9))
    assert is_principal(E, QDivisor({T: 3, INFINITY: -3}))
    # the rational criterion: T - O has the torsion class sum T, so 3(T - O) is principal
    res = is_principal(E, QDivisor({T: 1, INFINITY: -1}))
    assert res and res.class_sum == T and res.torsion_order == 3
    assert not is_principal(E, QDivisor({T: 1}))
    A = e4_named_point("A", 1)
    assert not is_principal(E4, QDivisor({A: 1, INFINITY: -1}))


def test_curves_are_nonsingular():
    assert set(CURVES) == {"E3", "E4", "E5", "E6"}
