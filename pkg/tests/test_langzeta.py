import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtwheel.chipfire import Configuration, _is_critical_blocks, enumerate_criticals
from qtwheel.errors import InvalidArgument
from qtwheel.exactmath import (
    Q,
    T,
    Matrix,
    RationalSeries,
    UniPoly,
    exp_from_counts,
    log_series_counts,
    series_expand,
)
from qtwheel.langzeta import (
    AutomatonMG,
    count_accepted_words,
    elliptic_zeta,
    mg_accepts,
    reciprocity_holds,
    word_count,
    zeta_det_form,
    zeta_language,
)
from qtwheel.wheel import WheelParams, wheel_poly


def test_transfer_matrix():
    assert AutomatonMG(3, 2).transfer_matrix() == Matrix([[2, 3, 1], [2, 3, 1], [2, 0, 1]])


def test_accept_examples():
    assert mg_accepts([4, 1, 0], 3, 2)
    assert not mg_accepts([0, 5, 0], 3, 2)
    assert not mg_accepts([], 3, 2)


def test_bad_input():
    with pytest.raises(InvalidArgument):
        mg_accepts([6], 3, 2)
    with pytest.raises(InvalidArgument):
        AutomatonMG(0, 2)


def test_word_counts():
    assert word_count(1) == T
    assert word_count(2) == T**2 + 2 * Q * T + 2 * T
    assert word_count(3, 3, 2) == 134


@pytest.mark.parametrize("k", range(1, 9))
def test_word_count_is_wheel_poly(k):
    assert word_count(k) == wheel_poly(k)


@pytest.mark.parametrize("k,q,t", list(itertools.product(range(1, 5), (1, 2, 3), (1, 2, 3))))
def test_scan_matches(k, q, t):
    n = count_accepted_words(k, q, t)
    assert n == word_count(k, q, t) == enumerate_criticals(WheelParams(k, q, t)).order


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_acceptance_is_criticality_and_rotation_invariant(q, t, data):
    word = data.draw(st.lists(st.integers(0, q + t), min_size=1, max_size=7))
    cut = data.draw(st.integers(0, len(word)))
    accepted = mg_accepts(word, q, t)
    assert accepted == mg_accepts(word[cut:] + word[:cut], q, t)
    assert accepted == _is_critical_blocks(tuple(word), q, t)


def test_zeta_examples():
    z = zeta_language(1, 1)
    assert z.same_function(RationalSeries(UniPoly([1, -1]) ** 2, UniPoly([1, -3, 1])))
    assert zeta_language().same_function(zeta_det_form())


def test_log_series_gives_wheel_polys():
    z = zeta_language()
    logs = log_series_counts(z, 8)
    assert logs == [wheel_poly(k) for k in range(1, 9)]
    assert exp_from_counts(logs, 8) == series_expand(z, 8)


def test_reciprocity():
    assert reciprocity_holds()
    # numeric instance: q = 5, t = 9 against the curve zeta with N1 = -9
    prod = zeta_language(5, 9) * elliptic_zeta(5, -9)
    assert prod.is_one()


def test_config_words_accepted():
    p = WheelParams(4, 2, 2)
    for c in enumerate_criticals(p):
        assert mg_accepts(c.chips, 2, 2)
    assert not mg_accepts(Configuration((0, 0, 0, 0), p).chips, 2, 2)
