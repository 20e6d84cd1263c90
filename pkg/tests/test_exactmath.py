import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weil3 import polynomial as P
from weil3.exactmath import (
    SurdValue,
    cauchy_bound,
    integer_kth_root,
    poly_sign_at,
    sturm_count,
    surd_sign,
)


@pytest.mark.parametrize(
    "a, b, m, expected",
    [(0, 0, 2, 0), (-3, 2, 2, -1), (-2, 2, 2, 1), (3, -2, 2, 1), (2, -2, 2, -1), (5, 0, 7, 1)],
)
def test_surd_sign_examples(a, b, m, expected):
    assert surd_sign(SurdValue(Fraction(a), Fraction(b), m)) == expected


def test_square_radicand_is_folded():
    v = SurdValue(Fraction(1), Fraction(3), 4)
    assert (v.a, v.b, v.m) == (7, 0, 1)
    assert SurdValue.sqrt(9, -2) == -6


rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)


@settings(max_examples=500, deadline=None)
@given(rationals, rationals, st.integers(min_value=1, max_value=10**6))
def test_surd_sign_matches_float(a, b, m):
    value = float(a) + float(b) * math.sqrt(m)
    if abs(value) > 1e-6:
        assert surd_sign(SurdValue(a, b, m)) == (1 if value > 0 else -1)


def test_surd_arithmetic():
    s2 = SurdValue.sqrt(2)
    assert s2 * s2 == 2
    assert (1 + s2) * (1 - s2) == -1
    assert (3 - 2 * s2).sign() == 1  # 3 > 2.83
    assert SurdValue.sqrt(2, 2) > 2


def test_sturm_examples():
    assert sturm_count((-2, 0, 1), 0, 2) == 1
    assert sturm_count((0, -5, 0, 1), -3, 3) == 3
    # (0, 3]: sqrt(5) only, 0 excluded by the half-open convention
    assert sturm_count((0, -5, 0, 1), 0, 3) == 1
    assert sturm_count((0, -5, 0, 1), -3, 0) == 2


def test_sturm_surd_endpoints():
    f = (-5, 0, 1)  # roots +-sqrt(5)
    hi = SurdValue.sqrt(5)
    assert sturm_count(f, 0, hi) == 1
    assert sturm_count(f, -hi, hi) == 1  # -sqrt(5) sits on the open end
    assert poly_sign_at(f, -hi) == 0
    assert sturm_count(f, 0, SurdValue(Fraction(-1, 1000), Fraction(1), 5)) == 0


def test_sturm_rejects_repeated_roots():
    with pytest.raises(ValueError):
        sturm_count(P.power((-1, 1), 2), -5, 5)
    with pytest.raises(ValueError):
        sturm_count((-2, 0, 1), 2, 0)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(min_value=-30, max_value=30), min_size=1, max_size=5, unique=True),
       st.integers(min_value=-3, max_value=3))
def test_sturm_counts_known_integer_roots(roots, shift):
    # (t - r_i) * (t^2 + 1 + shift^2): the quadratic adds no real roots
    f = (1,)
    for r in roots:
        f = P.mul(f, (-r, 1))
    f = P.mul(f, (1 + shift * shift, 0, 1))
    bound = cauchy_bound(f)
    assert sturm_count(f, -bound, bound) == len(roots)
    assert sturm_count(f, 0, bound) == sum(1 for r in roots if r > 0)


@pytest.mark.parametrize("x, k, expected", [(64, 3, 4), (8, 2, None), (729, 6, 3), (0, 5, 0), (1, 9, 1), (2**300, 3, 2**100)])
def test_integer_kth_root_examples(x, k, expected):
    assert integer_kth_root(x, k) == expected


def test_integer_kth_root_of_a_cube():
    assert integer_kth_root(512, 3) == 8


@pytest.mark.parametrize("k", range(1, 7))
def test_integer_kth_root_round_trip(k):
    for r in range(0, 1001):
        assert integer_kth_root(r**k, k) == r
        if r > 1 and k > 1:
            assert integer_kth_root(r**k + 1, k) is None
