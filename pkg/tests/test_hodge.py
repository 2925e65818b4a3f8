import random
from fractions import Fraction

import pytest

from gkzkit.errors import NotConfluentCase, NotRegularCase, PreconditionViolation
from gkzkit.fuchs import fuchs_polygon
from gkzkit.hodge import (
    HypergeomParams,
    fedorov_numbers,
    operator_from_params,
    sabbah_yu_numbers,
    singular_points,
)

half = Fraction(1, 2)


def _random(rng, m_prime, m):
    vals = rng.sample([Fraction(k, 12) for k in range(12)], m_prime + m)
    return HypergeomParams.of(vals[:m_prime], vals[m_prime:])


def test_elliptic_curve():
    assert fedorov_numbers(HypergeomParams.of([0, 0], [half, half])).as_dict() == {0: 1, 1: 1}


def test_single_parameter():
    assert fedorov_numbers(HypergeomParams.of([0], [half])).as_dict() == {0: 1}
    assert sabbah_yu_numbers(HypergeomParams.of([0], [])).as_dict() == {-1: 1}


def test_rational_levels():
    h = sabbah_yu_numbers(HypergeomParams.of([Fraction(1, 3), Fraction(2, 3)], []))
    assert h.as_dict() == {Fraction(-1, 3): 1, Fraction(-2, 3): 1}


def test_reading_zero_is_integral():
    h = sabbah_yu_numbers(HypergeomParams.of([Fraction(1, 3), Fraction(2, 3)], []),
                          reading="zero")
    assert h.as_dict() == {-1: 1, -2: 1}


def test_case_errors():
    with pytest.raises(NotRegularCase):
        fedorov_numbers(HypergeomParams.of([0, half], [Fraction(1, 3)]))
    with pytest.raises(NotConfluentCase):
        sabbah_yu_numbers(HypergeomParams.of([0], [half]))
    with pytest.raises(NotConfluentCase):
        sabbah_yu_numbers(HypergeomParams.of([0], [half, Fraction(1, 3)]))


@pytest.mark.parametrize("lam,mu", [([], [half]), ([1], []), ([half], [half])])
def test_parameter_validation(lam, mu):
    with pytest.raises(PreconditionViolation):
        HypergeomParams.of(lam, mu)


def test_equal_length_reading_is_dual_of_regular_formula():
    # with m' = m the irregular count gives the regular one reflected k -> -k-1
    rng = random.Random(5)
    for _ in range(200):
        m = rng.randint(1, 5)
        p = _random(rng, m, m)
        reg = fedorov_numbers(p).as_dict()
        irr = sabbah_yu_numbers(p, allow_equal=True).as_dict()
        assert irr == {-k - 1: v for k, v in reg.items()}


def test_totals():
    rng = random.Random(6)
    for _ in range(200):
        mp = rng.randint(1, 5)
        assert fedorov_numbers(_random(rng, mp, mp)).total == mp
        assert sabbah_yu_numbers(_random(rng, mp, rng.randint(0, mp - 1))).total == mp


def test_invariant_under_input_order():
    p = HypergeomParams.of([Fraction(2, 3), 0], [Fraction(5, 6), Fraction(1, 6)])
    q = HypergeomParams.of([0, Fraction(2, 3)], [Fraction(1, 6), Fraction(5, 6)])
    assert fedorov_numbers(p) == fedorov_numbers(q)


def test_shift_that_crosses_no_lambda_keeps_levels():
    lam = [Fraction(1, 10), Fraction(5, 10)]
    mu = [Fraction(3, 10), Fraction(7, 10)]
    base = fedorov_numbers(HypergeomParams.of(lam, mu))
    moved = fedorov_numbers(HypergeomParams.of(lam, [x + Fraction(1, 20) for x in mu]))
    assert base == moved


def test_operator_and_singular_points():
    p = HypergeomParams.of([0], [])
    op = operator_from_params(p)
    assert str(op) == "(theta) + z*(-1)"
    assert fuchs_polygon(op).regular_at_origin
    assert fuchs_polygon(op.at_infinity()).slopes == (-1,)
    assert singular_points(p) == ("0", "infinity")
    assert singular_points(HypergeomParams.of([0, 0], [half, half])) == ("0", "1", "infinity")


def test_elliptic_operator_is_regular_at_both_ends():
    op = operator_from_params(HypergeomParams.of([0, 0], [half, half]))
    assert fuchs_polygon(op).regular_at_origin
    assert fuchs_polygon(op.at_infinity()).regular_at_origin
