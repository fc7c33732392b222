from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from darboux.branching import (INF, STANDARD_POINTS, branching_data, candidate_divisors,
                               check_dramifico, dramifico_partition, fiber_product_branching,
                               hurwitz_genus, klein_branching, power_branching,
                               pullback_exponents)
from darboux.coverings import covering_keys, get_covering
from darboux.errors import InconsistentBranchingError
from darboux.hypergeom import SCHWARTZ_TYPES, HpgParams


def test_tetra4_fibers():
    c = get_covering("tetra4")
    assert branching_data(c, 0) == [3, 1]
    assert branching_data(c, INF) == [3, 1]
    assert branching_data(c, 1) == [2, 2]
    assert check_dramifico(c, 3)
    assert check_dramifico(c, 1)


def test_phi1_five_point():
    assert branching_data(get_covering("phi1"), 0) == [5, 5, 1, 1]
    assert check_dramifico("phi1", 5, 0)


def test_dramifico_partition():
    assert dramifico_partition(12, 5) == [5, 5, 1, 1]
    assert dramifico_partition(6, 1) == [1] * 6


def test_degree_60_by_substitution():
    # x -> x^5 in the degree-12 icosahedral map has the branching of the degree-60 map
    c = get_covering("icosa12")
    assert power_branching(c, 5, 0) == [5] * 12
    assert power_branching(c, 5, 1) == [2] * 30
    assert power_branching(c, 5, INF) == [3] * 20


def test_hurwitz():
    assert hurwitz_genus(4, 0, [[3, 1], [3, 1], [2, 2]]) == 0
    assert hurwitz_genus(12, 0, [[5, 5, 1, 1], [2] * 6, [3] * 4]) == 0
    with pytest.raises(InconsistentBranchingError):
        hurwitz_genus(4, 0, [[3, 1], [2, 2]])
    with pytest.raises(InconsistentBranchingError):
        hurwitz_genus(4, 0, [[3, 1, 1]])


@given(st.lists(st.integers(1, 6), min_size=1, max_size=5), st.lists(st.integers(1, 6), min_size=1, max_size=5))
def test_fiber_product_degree(psi, phi):
    parts = fiber_product_branching(psi, phi)
    assert sum(r * len(p) // 1 for r, p in zip([1] * len(parts), parts)) >= 0
    # above each point of psi's fiber with index a the indices sum to deg(phi)
    for a, part in zip(psi, parts):
        assert sum(part) == sum(phi)


@pytest.mark.parametrize("key,parts", [
    ("klein-1/2-1/3-2/5", [[2, 2, 2, 1], [3, 3, 1], [5, 2]]),
    ("klein-1/3-2/3-1/5", [[2, 2, 2], [3, 2, 1], [5, 1]]),
    ("klein-1/3-2/5-3/5", [[2, 2, 2, 2, 2], [3, 3, 3, 1], [5, 3, 2]]),
])
def test_explicit_klein_maps(key, parts):
    c = get_covering(key)
    got = [branching_data(c, v) for v in (1, INF, 0)]
    assert got == parts
    rep = tuple(F(q) for q in key.split("-")[1:])
    kb = klein_branching(rep, "icosahedral")
    assert [sorted(p, reverse=True) for p in kb.partitions] == parts


def test_klein_degrees():
    degrees = [klein_branching(t.representative, t.family).degree for t in SCHWARTZ_TYPES]
    assert degrees == [1, 2, 1, 2, 1, 7, 3, 2, 6, 2, 10, 4, 6, 6]


def test_elliptic_coverings_have_degree_12():
    for key in ("phi3", "phi4", "phi5", "phi6"):
        c = get_covering(key)
        for v in (0, 1, INF):
            assert sum(branching_data(c, v)) == 12


def test_pullback_scheme_of_phi3():
    s = pullback_exponents(HpgParams(F(-1, 30), F(3, 10), F(3, 5)), "phi3")
    assert all(sorted(p.exponents) != [0, 1] for p in s.points)
    assert len(candidate_divisors(s, extra_point_budget=0)) == 2


def test_registry():
    assert len(covering_keys("standard")) == 9
    assert set(STANDARD_POINTS) == {"tetrahedral", "octahedral", "icosahedral"}
