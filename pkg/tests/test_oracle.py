import numpy as np
import pytest

from weil3 import polynomial as P
from weil3.classify import scaled_cyclotomic
from weil3.padic import valuation
from weil3.oracle import (
    OracleError,
    numeric_factor_search,
    numeric_weil_batch,
    numeric_weil_check,
    root_set,
    sextic,
    sturm_weil_check,
    tower_has_root,
    tower_roots,
)
from weil3.weilcheck import box_triples


@pytest.mark.parametrize(
    "q, triple, expected",
    [(2, (0, 0, 0), True), (2, (9, 0, 0), False), (5, (1, -5, -10), True), (2, (1, 1, 1), True),
     (4, (-12, 60, -160), True), (9, (-18, 135, -540), True), (8, (6, 36, 104), True)],
)
def test_numeric_and_sturm_examples(q, triple, expected):
    assert numeric_weil_check(q, *triple) is expected
    assert sturm_weil_check(q, *triple) is expected


def test_q2_050_oracles_agree():
    # t^3 - t has roots in range, but the sextic's Weil status is settled by the oracles jointly
    assert numeric_weil_check(2, 0, 5, 0) == sturm_weil_check(2, 0, 5, 0)


def test_tolerance_range_enforced():
    with pytest.raises(ValueError):
        numeric_weil_check(2, 0, 0, 0, tol=1e-3)
    with pytest.raises(ValueError):
        numeric_weil_check(2, 0, 0, 0, tol=1e-13)


def test_root_set_pairs_conjugates():
    rs = root_set(2, 1, 1, 1)
    assert len(rs.roots) == 6 and len(rs.pairing) == 3
    for i, j in rs.pairing:
        assert abs(rs.roots[i] - np.conj(rs.roots[j])) < 1e-9
        assert abs(abs(rs.roots[i]) - np.sqrt(2)) < 1e-9


def test_repeated_real_roots_keep_imaginary_parts():
    # an all-real eigenvalue batch must not truncate later complex roots
    roots = root_set(4, -4, 12, -32).roots  # (t - 2)^2 (t^2 + 4)^2
    assert sorted(round(abs(z.imag), 6) for z in roots) == [0, 0, 2, 2, 2, 2]


@pytest.mark.parametrize("tol", [1e-10, 1e-9, 1e-8, 1e-7])
@pytest.mark.parametrize("q", [2, 4, 9])
def test_numeric_verdict_stable_under_tolerance(q, tol):
    triples = list(box_triples(q, widen=1))
    assert np.array_equal(numeric_weil_batch(q, triples, tol), numeric_weil_batch(q, triples, 1e-9))


def test_factor_search_examples():
    g, h = numeric_factor_search(sextic(2, 0, 1, 0))
    assert P.mul(g, h) == sextic(2, 0, 1, 0)
    assert (2, 0, 1) in (g, h)
    assert numeric_factor_search(sextic(2, 1, 1, 1)) is None
    assert numeric_factor_search(scaled_cyclotomic(7, 4)) is None


def test_factor_search_rejects_non_sextic():
    with pytest.raises(ValueError):
        numeric_factor_search((1, 0, 1))


def test_factor_search_on_cube():
    g, h = numeric_factor_search(P.power((8, 2, 1), 3))
    assert P.mul(g, h) == P.power((8, 2, 1), 3) and P.degree(g) == 2


def test_tower_fixtures():
    assert tower_roots((1, 0, 1), 2) == []
    assert tower_roots((-2, 0, 1), 2) == []
    # t^2 + t + 2 over Z_2: one unit root and one root of valuation 1
    vals = sorted(valuation(x % 2**k, 2) for x, k in tower_roots((2, 1, 1), 2, complete=True))
    assert vals == [0, 1]
    assert tower_has_root((-2, 0, 1), 7)


def test_tower_escalation_failure_raises(monkeypatch):
    from weil3 import oracle

    # roots 1 and 1 + 2^12: f' has valuation 12 there, too large to certify at 2^16
    f = P.mul((-1, 1), (-(1 + 2**12), 1))
    assert tower_roots(f, 2, levels=(8, 16)) is None
    monkeypatch.setattr(oracle, "TOWER_LEVELS", (8, 16))
    with pytest.raises(OracleError):
        oracle.tower_has_root(f, 2)
    monkeypatch.undo()
    assert tower_has_root(f, 2)


def test_tower_cap_is_an_error():
    with pytest.raises(OracleError):
        tower_has_root(P.mul((-1, 1), (-(1 + 2**40), 1)), 2)
