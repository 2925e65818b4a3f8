from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkzkit.errors import EmptyOperator, SingularConversion
from gkzkit.fuchs import ThetaOperator, fuchs_polygon, fuchs_slope_from_L_slope, stirling2


def test_regular_example():
    p = fuchs_polygon([(1, 1, 1), (1, 0, 0)])
    assert p.regular_at_origin and p.slopes == ()


def test_irregular_example():
    p = fuchs_polygon([(1, 3, 1), (2, 0, 0)])
    assert not p.regular_at_origin and p.slopes == (-2,)


def test_inverse_kummer():
    op = ThetaOperator.of({0: [Fraction(-1, 2), -1], 1: [0, Fraction(-1, 2), 1]})
    p = fuchs_polygon(op)
    assert p.slopes == (-1,) and p.hull_vertices == ((1, 0), (2, -1))


@pytest.mark.parametrize("s_l,s_f", [(2, -1), (Fraction(1, 2), Fraction(1, 2)), (-1, 2)])
def test_slope_conversion(s_l, s_f):
    assert fuchs_slope_from_L_slope(s_l) == s_f


@pytest.mark.parametrize("bad", [0, 1])
def test_slope_conversion_singular(bad):
    with pytest.raises(SingularConversion):
        fuchs_slope_from_L_slope(bad)


def test_slope_conversion_closed_form():
    for s in [Fraction(k, 3) for k in range(-9, 10) if k not in (0, 3)]:
        assert fuchs_slope_from_L_slope(s) == 1 - s


def test_empty_operator():
    with pytest.raises(EmptyOperator):
        fuchs_polygon([])


def test_theta_to_terms():
    # theta^2 = z^2 d^2 + z d
    assert ThetaOperator.of({0: [0, 0, 1]}).to_terms() == [(1, 1, 1), (1, 2, 2)]
    assert [stirling2(4, i) for i in range(5)] == [0, 1, 7, 6, 1]


def test_chart_at_infinity():
    op = ThetaOperator.of({0: [0, 1], 1: [-1]})  # theta - z
    assert fuchs_polygon(op).regular_at_origin
    assert fuchs_polygon(op.at_infinity()).slopes == (-1,)


def test_apply_to_series_exp():
    # theta - z kills exp(z) = sum z^k / k!
    coeffs = [Fraction(1)]
    for k in range(1, 8):
        coeffs.append(coeffs[-1] / k)
    op = ThetaOperator.of({0: [0, 1], 1: [-1]})
    out = op.apply_to_series(coeffs)
    assert all(v == 0 for i, v in out.items() if i < len(coeffs))


terms = st.lists(st.tuples(st.integers(-3, 3).filter(bool), st.integers(0, 4),
                           st.integers(0, 3)), min_size=1, max_size=5)


@settings(max_examples=80, deadline=None)
@given(terms, st.integers(0, 3), st.integers(0, 3))
def test_dominated_terms_do_not_change_polygon(ts, df, dv):
    p = fuchs_polygon(ts)
    f, v = p.hull_vertices[0]
    # a point weakly below-left of a hull vertex: (f - df, v - dv)
    s = f - df
    if s < 0:
        return
    r = s - (v - dv)
    if r < 0:
        return
    q = fuchs_polygon(ts + [(5, r, s)])
    assert q.hull_vertices == p.hull_vertices and q.slopes == p.slopes


@settings(max_examples=80, deadline=None)
@given(terms)
def test_single_vertex_iff_no_slopes(ts):
    p = fuchs_polygon(ts)
    assert p.regular_at_origin == (p.slopes == ())
