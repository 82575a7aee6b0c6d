from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from polysombor import radicals
from polysombor.radicals import (EQUAL, GREATER, INCONCLUSIVE, LESS, ZERO, InvalidRadicand, RadicalSum,
                                 cmp_numeric, format_radical, radical_of)

radical_sums = st.dictionaries(
    st.sampled_from([1, 2, 3, 5, 6, 7, 10, 13, 58]),
    st.fractions(min_value=-100, max_value=100, max_denominator=12),
    max_size=5,
).map(RadicalSum)


@pytest.fixture
def squarefree_tests():
    return [
        (1, (1, 1)),
        (2, (1, 2)),
        (8, (2, 2)),
        (13, (1, 13)),
        (20, (2, 5)),
        (72, (6, 2)),
        (232, (2, 58)),
        (49, (7, 1)),
    ]


def test_squarefree_split(squarefree_tests):
    for n, expected in squarefree_tests:
        assert radicals.squarefree_split(n) == expected, "Split of {} is not {}".format(n, expected)


def test_squarefree_split_rejects_nonpositive():
    with pytest.raises(InvalidRadicand):
        radicals.squarefree_split(0)


def test_radical_of_canonicalizes():
    assert radical_of(8) == RadicalSum({2: 2})
    assert radical_of(20) == RadicalSum({5: 2})
    assert radical_of(1) == RadicalSum({1: 1})
    assert radical_of(58).terms == ((58, Fraction(1)),)


def test_radicands_must_be_squarefree():
    with pytest.raises(InvalidRadicand):
        RadicalSum({4: 1})
    with pytest.raises(InvalidRadicand):
        RadicalSum({0: 1})


def test_canonical_form_drops_zeros():
    total = RadicalSum({2: 1}) + RadicalSum({2: -1, 5: 0})
    assert total == ZERO
    assert total.terms == ()
    assert not total


def test_from_terms_folds_square_factors():
    assert radicals.from_terms([(8, 1), (2, 3)]) == RadicalSum({2: 5})
    assert radicals.from_terms([(18, Fraction(1, 3))]) == RadicalSum({2: 1})


def test_scale_and_operators():
    a = RadicalSum({2: 3, 5: 1})
    assert a * Fraction(1, 2) == RadicalSum({2: Fraction(3, 2), 5: Fraction(1, 2)})
    assert 2 * a == a + a
    assert -a == radicals.negate(a)
    assert a - a == ZERO
    assert a.coefficient(5) == 1
    assert a.coefficient(7) == 0


def test_eval_float_matches_high_precision():
    value = RadicalSum({2: 40, 5: 56})
    oracle = float((40 * sympy.sqrt(2) + 56 * sympy.sqrt(5)).evalf(30))
    assert abs(radicals.eval_float(value) - oracle) <= 1e-12 * oracle


def test_cmp_numeric():
    assert cmp_numeric(radical_of(2), radical_of(3)) == LESS
    assert cmp_numeric(radical_of(3), radical_of(2)) == GREATER
    assert cmp_numeric(radical_of(8), RadicalSum({2: 2})) == EQUAL
    assert cmp_numeric(radical_of(2), radical_of(3), margin=1.0) == INCONCLUSIVE
    with pytest.raises(ValueError):
        cmp_numeric(radical_of(2), radical_of(3), margin=-1)


def test_cmp_numeric_margin_setting(settings):
    settings.SOMBOR_COMPARISON_MARGIN = 1.0
    assert cmp_numeric(radical_of(2), radical_of(3)) == INCONCLUSIVE
    # exact equality never depends on the margin
    assert cmp_numeric(radical_of(2), radical_of(2)) == EQUAL


def test_format_radical():
    assert format_radical(RadicalSum({2: 40, 5: 56})) == u"40√2 + 56√5"
    assert format_radical(RadicalSum({2: Fraction(3, 2)})) == u"(3/2)√2"
    assert format_radical(RadicalSum({13: 1})) == u"√13"
    assert format_radical(ZERO) == "0"
    assert format_radical(RadicalSum({1: 3, 2: -1})) == u"3 - √2"
    assert format_radical(RadicalSum({2: -2})) == u"-2√2"
    assert str(RadicalSum({2: 6})) == u"6√2"


@given(radical_sums, radical_sums)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(radical_sums)
def test_subtracting_self_is_zero(a):
    assert a - a == ZERO
    assert cmp_numeric(a, a) == EQUAL


@given(radical_sums, radical_sums)
def test_eq_exact_agrees_with_hash(a, b):
    if a == b:
        assert hash(a) == hash(b)


@given(st.integers(min_value=1, max_value=40), st.integers(min_value=1, max_value=500))
def test_square_factors_leave_the_root(c, s):
    assert radical_of(c * c * s) == radical_of(s) * c


@given(radical_sums, radical_sums, radical_sums)
def test_addition_associates(a, b, c):
    assert radicals.add(radicals.add(a, b), c) == radicals.add(a, radicals.add(b, c))


@given(radical_sums, radical_sums, st.fractions(min_value=-20, max_value=20, max_denominator=9))
def test_scale_distributes_over_addition(a, b, r):
    assert radicals.scale(radicals.add(a, b), r) == radicals.add(radicals.scale(a, r), radicals.scale(b, r))


@given(radical_sums, radical_sums)
def test_exact_equality_implies_equal_values(a, b):
    roundabout = radicals.subtract(radicals.add(a, b), b)
    assert radicals.eq_exact(a, roundabout)
    assert abs(radicals.eval_float(a) - radicals.eval_float(roundabout)) <= 1e-12 * max(1.0, abs(radicals.eval_float(a)))
