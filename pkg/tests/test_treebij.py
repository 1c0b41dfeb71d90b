import itertools
from collections import Counter

import pytest

from qtwheel.chipfire import Configuration, enumerate_criticals
from qtwheel.errors import InvalidArgument
from qtwheel.exactmath import BivariatePolynomial
from qtwheel.treebij import SpanningTree, config_to_tree, tree_to_config
from qtwheel.wheel import WheelParams, wheel_poly

W332 = WheelParams(3, 3, 2)


def test_block_with_zero_gets_forced_edge():
    tr = config_to_tree(Configuration((4, 1, 0), W332))
    assert tr.spokes == ((1, 4),)
    # edge 2 is v1 -> v2 (label 1); edge 1 is v3 -> v1, forced, label q
    assert tr.arcs == ((1, 3), (2, 1))
    assert tr.dist == 1 and tr.spoke_count == 1
    assert tr.to_json_obj() == {
        "spokes": [{"vertex": 1, "label": 4}],
        "arcs": [{"from": 3, "to": 1, "label": 3}, {"from": 1, "to": 2, "label": 1}],
    }


def test_json_round_trip():
    tr = config_to_tree(Configuration((4, 1, 0), W332))
    assert SpanningTree.from_json_obj(tr.to_json_obj(), W332) == tr


def test_non_critical_rejected():
    with pytest.raises(InvalidArgument):
        config_to_tree(Configuration((0, 5, 0), W332))


def test_bad_labels_rejected():
    tr = SpanningTree(W332, ((1, 4),), ((1, 2), (2, 1)))
    with pytest.raises(InvalidArgument):
        tree_to_config(tr)
    with pytest.raises(InvalidArgument):
        tree_to_config(SpanningTree(W332, ((1, 4),), ()))


@pytest.mark.parametrize("k,q,t", list(itertools.product(range(1, 5), range(1, 4), range(1, 4))))
def test_weight_preserving_bijection(k, q, t):
    p = WheelParams(k, q, t)
    trees = [config_to_tree(c) for c in enumerate_criticals(p)]
    assert len(set(trees)) == len(trees)
    assert all(tree_to_config(tr) == c for tr, c in zip(trees, enumerate_criticals(p)))
    per_skeleton = Counter(tr.skeleton() for tr in trees)
    weight = {tr.skeleton(): (tr.dist, tr.spoke_count) for tr in trees}
    for sk, n in per_skeleton.items():
        d, s = weight[sk]
        assert n == q**d * t**s
    assert BivariatePolynomial(dict(Counter(weight.values()))) == wheel_poly(k)
