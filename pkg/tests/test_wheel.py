import pytest

from qtwheel.errors import InvalidArgument, ResourceLimit
from qtwheel.exactmath import Q, T
from qtwheel.wheel import (
    WheelParams,
    build_wheel,
    enumerate_weighted_trees,
    reduced_laplacian,
    rim_arcs,
    wcyc,
    wheel_poly,
)


def test_params_validation():
    for bad in [(0, 1, 1), (1, -1, 1), (1, 1, 0)]:
        with pytest.raises(InvalidArgument):
            WheelParams(*bad)
    with pytest.raises(InvalidArgument):
        WheelParams(1.0, 1, 1)
    assert WheelParams(3, 3, 2).fire_threshold == 6


def test_degenerate_laplacians():
    assert reduced_laplacian(WheelParams(1, 3, 2)).tolist() == [[2]]
    assert reduced_laplacian(WheelParams(2, 3, 2)).tolist() == [[6, -4], [-4, 6]]
    assert reduced_laplacian(WheelParams(3, 3, 2)).tolist() == [[6, -3, -1], [-1, 6, -3], [-3, -1, 6]]


def test_laplacian_rows_sum_to_zero():
    for k in range(1, 6):
        g = build_wheel(WheelParams(k, 2, 3))
        assert all(s == 0 for s in g.laplacian().row_sums())


def test_small_wheel_polys():
    assert wheel_poly(1) == T
    assert wheel_poly(2) == T**2 + (2 + 2 * Q) * T
    assert wheel_poly(3).evaluate(3, 2) == 134


def test_values_at_one():
    # spanning-tree counts of the plain wheel: 1, 5, 16, 45, 121, 320
    assert [wheel_poly(k).evaluate(1, 1) for k in range(1, 7)] == [1, 5, 16, 45, 121, 320]


def test_products_of_printed_factors():
    # W_6(2,2) = t * WCyc2 * WCyc3 * WCyc6 = 2 * 8 * 43 * 13
    assert wheel_poly(6).evaluate(2, 2) == 8944
    assert wheel_poly(5).evaluate(3, 3) == 3 * 3911


@pytest.mark.parametrize("k", range(1, 9))
def test_tree_enumeration_matches_determinant(k):
    assert enumerate_weighted_trees(k) == wheel_poly(k)


def test_tree_enumeration_bound():
    with pytest.raises(ResourceLimit):
        enumerate_weighted_trees(13)


def test_wcyc_divides():
    for d in range(1, 13):
        assert wheel_poly(d).divmod_lex(wcyc(d))[1].is_zero()
    with pytest.raises(InvalidArgument):
        wcyc(0)


def test_rim_arcs():
    assert rim_arcs(4, frozenset({2, 3})) == [[1, 2, 3], [4]]
    assert rim_arcs(3, frozenset({1})) == [[2], [3, 1]]
    with pytest.raises(InvalidArgument):
        rim_arcs(3, frozenset({1, 2, 3}))
