import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkzkit.errors import DimensionMismatch, NotFull, NotPointed, SpanViolation
from gkzkit.fixtures import corpus, fixture
from gkzkit.lattice import (
    Tri,
    inspect_matrix,
    is_saturated,
    lattice_index,
    parallelepiped_points,
    validate,
)
from gkzkit.polyhedral import cone_points, semigroup_holes


def test_kummer_is_saturated():
    assert is_saturated(validate([[1, 0, 1], [0, 1, 1]])).status is Tri.YES


def test_0134_is_not_saturated():
    r = is_saturated(validate([[1, 1, 1, 1], [0, 1, 3, 4]]))
    assert r.status is Tri.NO and r.witness == (1, 2)


def test_not_pointed_certificate():
    with pytest.raises(NotPointed) as e:
        validate([[1, -1]])
    lam = e.value.certificate["positive_dependency"]
    assert all(x >= 0 for x in lam) and any(lam) and lam[0] * 1 + lam[1] * -1 == 0


def test_not_full_certificate():
    with pytest.raises(NotFull) as e:
        validate([[2, 0], [0, 1]])
    assert e.value.certificate["snf_diagonal"] == [1, 2]


def test_rank_deficient_is_not_full():
    with pytest.raises(NotFull):
        validate([[1, 1], [2, 2]])


def test_inspect_does_not_raise():
    g = inspect_matrix([[1, -1]])
    assert not g.pointed and g.full


def test_homogeneity_flags():
    flags = {name: g.homogeneous for name, g in corpus().items()}
    assert not flags["kummer"] and not flags["fourslopes"] and not flags["segment"]
    assert flags["m0134"] and flags["f21"] and flags["sres"] and flags["join"]


def test_lattice_index():
    unit = [(1, 0), (0, 1)]
    assert lattice_index([(2, 0), (0, 2)], unit) == 4
    assert lattice_index([(1, 0)], unit) == math.inf
    with pytest.raises(SpanViolation):
        lattice_index([(1, 1)], [(1, 0)])


def test_parallelepiped_of_unimodular_cone_is_origin():
    assert parallelepiped_points([(1, 0), (0, 1)]) == [(0, 0)]


def test_parallelepiped_count_is_determinant():
    pts = parallelepiped_points([(1, 0), (1, 4)])
    assert len(pts) == 4


def test_positive_functional_is_positive():
    for g in corpus().values():
        assert all(g.degree(a) > 0 for a in g.columns)


def test_holes_0134_and_saturated_fixtures():
    r = semigroup_holes(fixture("m0134"), 12)
    assert r.holes == ((1, 2),) and r.complete
    for name, g in corpus().items():
        if g.saturated is Tri.YES:
            assert semigroup_holes(g, 6).holes == (), name


def test_holes_brute_force_on_curve_0_2_5():
    g = validate([[1, 1, 1], [0, 2, 5]])
    bound = 12
    r = semigroup_holes(g, bound)
    pts = cone_points(g, bound)
    top = max(p[0] for p in pts)
    members = set()
    for a in range(top + 1):
        for b in range(top + 1 - a):
            for c in range(top + 1 - a - b):
                members.add((a + b + c, 2 * b + 5 * c))
    assert set(r.holes) == {p for p in pts if p not in members}
    assert (1, 1) in r.holes and (1, 3) in r.holes


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 7), min_size=2, max_size=3, unique=True))
def test_curve_saturation_matches_gaps(heights):
    # A = [[1,...],[0, h_1, ...]] is saturated iff every 0..max occurs in some degree
    hs = sorted([0] + heights)
    if math.gcd(*hs[1:]) != 1:
        return
    g = validate([[1] * len(hs), hs])
    status = is_saturated(g).status
    top = hs[-1]
    # in degree k the reachable heights are sums of k entries; saturation
    # needs every height 0..k*top in every degree k up to top
    sat = True
    reach = {0}
    for k in range(1, top + 2):
        reach = {r + h for r in reach for h in hs}
        if any(x not in reach for x in range(k * top + 1)):
            sat = False
            break
    assert (status is Tri.YES) == sat


def test_dimension_mismatch_on_ragged_input():
    with pytest.raises((DimensionMismatch, ValueError)):
        validate([[1, 0], [0]])
