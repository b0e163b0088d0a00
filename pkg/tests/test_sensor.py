import random
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulercat import (
    CycleDetected,
    InvalidPlacement,
    NotCoverEdge,
    NotMonotone,
    NotMonotoneWarning,
    UnknownNode,
    count_by_level_sets,
    count_targets,
    counting_function,
    edge_target,
    full_subcategory,
    new_network,
    node_target,
    prime_filter,
    simulate,
)
from eulercat.euler import euler_characteristic, nerve_euler_characteristic
from eulercat.sensor import transitive_reduction

from .conftest import TEN_NODE_H


def test_new_network_examples(ten_node):
    net = new_network(["v"], [])
    assert net.poset.hom == ((1,),)
    net, _ = ten_node
    assert len(net.nodes) == 10 and len(net.hasse_edges) == 17
    with pytest.raises(CycleDetected):
        new_network(["p", "q"], [("p", "q"), ("q", "p")])
    with pytest.raises(UnknownNode):
        new_network(["p"], [("p", "q")])


def test_transitive_edge_rejected_with_hint():
    with pytest.raises(NotCoverEdge) as exc:
        new_network(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    assert exc.value.reduction == [("a", "b"), ("b", "c")]


def test_counting_function_examples(ten_node):
    net, targets = ten_node
    assert counting_function(net, []).values == (0,) * 10
    assert counting_function(net, targets).as_dict() == TEN_NODE_H
    single = new_network(["v"], [])
    assert counting_function(single, [node_target("v")]).values == (1,)
    with pytest.raises(InvalidPlacement):
        counting_function(net, [edge_target("A1", "H3")])
    with pytest.raises(InvalidPlacement):
        counting_function(net, [node_target("Z9")])


def test_count_targets_examples(ten_node):
    net, targets = ten_node
    h = counting_function(net, targets)
    assert count_targets(net, counting_function(net, [])) == 0
    assert count_targets(net, h) == 5
    single = new_network(["v"], [])
    assert count_targets(single, {"v": 7}) == 7


def test_level_sets(ten_node):
    net, targets = ten_node
    h = counting_function(net, targets)
    levels, total = count_by_level_sets(net, h)
    assert levels == [2, 0, 2, 1] and total == 5
    # the level characteristics agree with the nerve oracle
    for i, chi in enumerate(levels, 1):
        S = [p for p, v in TEN_NODE_H.items() if v >= i]
        assert nerve_euler_characteristic(full_subcategory(net.poset, S)) == chi
    single = new_network(["v"], [])
    assert count_by_level_sets(single, {"v": 1}) == ([1], 1)
    assert count_by_level_sets(net, counting_function(net, [])) == ([], 0)


def test_non_monotone_is_flagged(ten_node):
    net, _ = ten_node
    h = dict(TEN_NODE_H, H3=0)
    with pytest.warns(NotMonotoneWarning):
        count_targets(net, h)
    with pytest.raises(NotMonotone):
        count_by_level_sets(net, h)


def test_simulate_examples():
    net, targets, h = simulate(1, 0, "1/2", 3)
    assert net.nodes == ("n0",) and targets == [] and h.values == (0,)
    assert count_targets(net, h) == 0
    assert simulate(9, 7, "1/2", 11) == simulate(9, 7, "1/2", 11)
    net, targets, h = simulate(12, 20, "1/3", 42)
    assert count_targets(net, h) == 20


def test_transitive_reduction():
    edges = [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("a", "d")]
    assert transitive_reduction("abcd", edges) == [("a", "b"), ("b", "c"), ("c", "d")]


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12), st.integers(0, 20), st.sampled_from(["0", "1/4", "1/3", "1/2", "1"]),
       st.integers(0, 2**63 - 1))
def test_exact_count_property(n, t, density, seed):
    net, targets, h = simulate(n, t, density, seed)
    assert h.is_monotone()
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert count_targets(net, h) == len(targets) == t
    levels, total = count_by_level_sets(net, h)
    assert total == t
    for p, q in net.hasse_edges:
        assert transitive_reduction(net.nodes, [(p, q)]) == [(p, q)]
    for p in net.nodes:
        assert euler_characteristic(full_subcategory(net.poset, prime_filter(net.poset, p))) == 1


def test_simulated_edges_are_covers():
    rng = random.Random(0)
    for _ in range(50):
        net, _, _ = simulate(rng.randint(1, 12), 0, "1/2", rng.getrandbits(32))
        assert transitive_reduction(net.nodes, net.hasse_edges) == list(net.hasse_edges)
