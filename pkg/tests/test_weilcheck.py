import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weil3 import polynomial as P
from weil3.oracle import numeric_weil_check, sturm_weil_check
from weil3.weilcheck import (
    WeilCandidate,
    a2_range,
    a3_range,
    associated_cubics,
    box_triples,
    enumerate_box,
    failed_conditions,
    lemma_cubic_all_real_positive,
    prime_power,
    special_form_check,
    theorem1_check,
    weil_branch,
)


@pytest.mark.parametrize("q, pn", [(2, (2, 1)), (8, (2, 3)), (9, (3, 2)), (27, (3, 3)), (49, (7, 2)), (1024, (2, 10)), (7**6, (7, 6))])
def test_prime_power(q, pn):
    assert prime_power(q) == pn


@pytest.mark.parametrize("q", [0, 1, 6, 12, 100, 2 * 3**5])
def test_prime_power_rejects(q):
    with pytest.raises(ValueError, match="not a prime power"):
        prime_power(q)


def test_candidate_validates_q():
    with pytest.raises(ValueError):
        WeilCandidate(8, 2, 2, 0, 0, 0)
    w = WeilCandidate.of(9, 3, 9, 27)
    assert (w.p, w.n) == (3, 2)
    assert w.polynomial() == (729, 243, 81, 27, 9, 3, 1)


@pytest.mark.parametrize(
    "q, triple, expected",
    [
        (2, (0, 0, 0), True),
        (2, (1, 1, 1), True),
        (2, (9, 0, 0), False),
        (5, (1, -5, -10), True),
        (9, (3, 9, 27), True),
        (4, (2, 4, 8), True),
        (2, (1, 3, 0), False),
        (2, (2, 1, 0), True),
        (4, (-4, 12, -32), True),  # (t - 2)^2 (t^2 + 4)^2
        (4, (-12, 60, -160), True),  # (t - 2)^6
    ],
)
def test_theorem1_examples(q, triple, expected):
    w = WeilCandidate.of(q, *triple)
    assert theorem1_check(w) is expected
    assert sturm_weil_check(q, *triple) is expected


def test_failed_condition_reporting():
    assert 1 in failed_conditions(WeilCandidate.of(2, 9, 0, 0))
    assert failed_conditions(WeilCandidate.of(2, 1, 3, 0)) == [3]


def test_special_form_examples():
    assert special_form_check(WeilCandidate.of(5, 1, -5, -10)) == 1
    assert weil_branch(5, 1, -5, -10) == "special"
    assert special_form_check(WeilCandidate.of(2, 3, -2, -12)) is None  # 9 >= 8


@pytest.mark.parametrize("q", [2, 3, 5, 9, 16])
def test_special_form_polynomial_identity(q):
    for beta in range(-math.isqrt(4 * q - 1), math.isqrt(4 * q - 1) + 1):
        w = WeilCandidate.of(q, beta, -q, -2 * q * beta)
        assert w.polynomial() == P.mul(P.power((-q, 0, 1), 2), (q, beta, 1))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(-40, 40), st.integers(-100, 100), st.integers(-400, 400))
def test_mirror_symmetry(q, a1, a2, a3):
    w = WeilCandidate.of(q, a1, a2, a3)
    assert theorem1_check(w) == theorem1_check(w.mirror())


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 8, 11, 13, 27]), st.integers(-40, 40), st.integers(-100, 150), st.integers(-600, 600))
def test_lemma_cubics_match_strict_branch(q, a1, a2, a3):
    # non-square q: the strict conditions say both associated cubics have positive roots
    w = WeilCandidate.of(q, a1, a2, a3)
    r, rt = associated_cubics(w)
    lemma = lemma_cubic_all_real_positive(r) and lemma_cubic_all_real_positive(rt)
    assert lemma == (weil_branch(q, a1, a2, a3) == "conditions")


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 9, 16]), st.integers(-30, 30), st.integers(-120, 200), st.integers(-900, 900))
def test_theorem1_agrees_with_oracles_on_random_triples(q, a1, a2, a3):
    exact = theorem1_check(WeilCandidate.of(q, a1, a2, a3))
    assert exact == sturm_weil_check(q, a1, a2, a3) == numeric_weil_check(q, a1, a2, a3)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_box_contains_every_weil_triple(q):
    box = set(box_triples(q))
    literal = [t for t in _loose_box(q) if weil_branch(q, *t)]
    assert literal and set(literal) <= box


def _loose_box(q):
    amax = math.isqrt(36 * q) + 1
    for a1 in range(-amax, amax + 1):
        for a2 in range(-(a1 * a1 // 3 + 3 * q + 1), a1 * a1 // 3 + 3 * q + 2):
            lo3, hi3 = a3_range(q, a1, a2)
            if lo3 <= hi3:
                yield from ((a1, a2, a3) for a3 in range(lo3 - 1, hi3 + 2))


def test_enumerate_box_is_lexicographic_and_contains_examples():
    ws = list(enumerate_box(2))
    triples = [w.coefficients for w in ws]
    assert triples == sorted(triples)
    assert (0, 0, 0) in triples and (1, 1, 1) in triples
    assert all(w.p == 2 and w.n == 1 for w in ws)


def test_a2_range_lower_bound():
    assert a2_range(2, 0) == (-2, 6)
    assert a2_range(9, 3)[0] == -9  # condition 4 bound beats -81 + 36
    assert a2_range(2, 5)[0] == 11  # -18 + ceil(sqrt(800))
