#!/usr/bin/env python3
"""Tests for connectivity, roots, bipartiteness and Euler classification."""

import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ngdigraph.analysis import (
    EulerianClass,
    LoopPolicy,
    connectivity_verdict,
    eulerian_class,
    exhaustive_witness,
    find_root_by_elimination,
    has_two_way_pair,
    is_acyclic,
    is_bipartite_underlying,
    is_quasi_strongly_connected,
    is_strongly_connected,
    is_symmetric,
    is_weakly_connected,
    odd_cycle,
    reachability,
    roots,
    set_in_neighborhood,
    set_out_neighborhood,
    sources_and_sinks,
)
from ngdigraph.digraph import Digraph, build_digraph
from ngdigraph.errors import DomainError
from ngdigraph.generators import random_acyclic_digraph, random_digraph
from ngdigraph.groups import enumerate_ng_groups, group_census, h_class_group
from ngdigraph.models import Transformation
from ngdigraph.transformations import identity, parse_transformation_set

NG_1 = build_digraph(parse_transformation_set("{(a,a,c),(c,c,a)}"))
ORDER_TWO_ON_FOUR = build_digraph(parse_transformation_set("{(1,1,4,4),(4,4,1,1)}"))
ORDER_SIX_ON_FOUR = build_digraph(h_class_group(Transformation((0, 0, 2, 3))))


def digraph_from_arcs(n, arcs):
    counts = np.zeros((n, n), dtype=np.int64)
    for i, j in arcs:
        counts[i, j] += 1
    return Digraph(n, counts)


CYCLE_3 = digraph_from_arcs(3, [(0, 1), (1, 2), (2, 0)])
CYCLE_4 = digraph_from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
PATH_3 = digraph_from_arcs(3, [(0, 1), (1, 2)])
IDENTITY_2 = build_digraph([identity(2)])

digraphs = st.tuples(
    st.integers(2, 8), st.sampled_from([0.1, 0.3, 0.5]), st.integers(0, 2**32 - 1)
).map(lambda args: random_digraph(args[0], args[1], np.random.default_rng(args[2])))


def test_set_neighborhoods():
    assert set_in_neighborhood(NG_1, {1}) == frozenset()
    assert set_out_neighborhood(NG_1, {1}) == frozenset({0, 2})
    assert set_in_neighborhood(NG_1, {0, 1, 2}) == frozenset()
    assert set_out_neighborhood(NG_1, {0, 1, 2}) == frozenset()
    assert set_in_neighborhood(ORDER_TWO_ON_FOUR, {1, 2}) == frozenset()
    with pytest.raises(DomainError):
        set_in_neighborhood(NG_1, {5})


def test_ng_digraphs_are_never_strongly_connected():
    for n in (3, 4):
        for group in enumerate_ng_groups(n):
            verdict = is_strongly_connected(build_digraph(group))
            assert not verdict.strongly_connected
            assert verdict.witness == group_census(group).ng_fix.complement().members


def test_strong_connectivity_small_cases():
    assert is_strongly_connected(CYCLE_3).strongly_connected
    assert is_strongly_connected(CYCLE_3).witness is None
    assert not is_strongly_connected(IDENTITY_2).strongly_connected


def test_roots_and_quasi_strong_connectivity():
    assert is_quasi_strongly_connected(NG_1)
    assert roots(NG_1) == frozenset({1})
    assert find_root_by_elimination(NG_1) == 1
    assert not is_quasi_strongly_connected(ORDER_TWO_ON_FOUR)
    assert roots(ORDER_TWO_ON_FOUR) == frozenset()
    single = build_digraph([Transformation((0,))])
    assert is_quasi_strongly_connected(single)


def test_weak_connectivity():
    assert is_weakly_connected(NG_1)
    assert not is_weakly_connected(IDENTITY_2)
    assert is_weakly_connected(ORDER_SIX_ON_FOUR)


def test_sources_sinks_and_acyclicity():
    assert sources_and_sinks(PATH_3) == (frozenset({0}), frozenset({2}))
    assert is_acyclic(PATH_3)
    assert sources_and_sinks(NG_1) == (frozenset({1}), frozenset())
    assert not is_acyclic(NG_1)
    assert not is_acyclic(digraph_from_arcs(2, [(0, 0)]))


def test_two_way_pairs():
    assert has_two_way_pair(NG_1, {0, 2}) == (0, 2)
    order_three = enumerate_ng_groups(4, order_filter=3)[0]
    ng_fix = group_census(order_three).ng_fix
    assert has_two_way_pair(build_digraph(order_three), ng_fix) is not None
    assert has_two_way_pair(build_digraph([Transformation((0, 0, 2))]), {0, 2}) is None


def test_bipartite_policies():
    for policy in LoopPolicy:
        assert not is_bipartite_underlying(NG_1, policy)
    assert odd_cycle(NG_1) == (0, 1, 2)
    assert is_bipartite_underlying(CYCLE_4)
    assert odd_cycle(CYCLE_4) is None
    loop = digraph_from_arcs(1, [(0, 0)])
    assert is_bipartite_underlying(loop, LoopPolicy.IGNORE)
    assert not is_bipartite_underlying(loop, LoopPolicy.COUNT_AS_ODD_CYCLE)


def test_eulerian_classes():
    assert eulerian_class(NG_1) is EulerianClass.SEMI_EULERIAN
    assert eulerian_class(CYCLE_3) is EulerianClass.EULERIAN
    assert eulerian_class(ORDER_TWO_ON_FOUR) is EulerianClass.EULERIAN
    assert eulerian_class(IDENTITY_2) is EulerianClass.DISCONNECTED
    star = digraph_from_arcs(4, [(0, 1), (0, 2), (0, 3)])
    assert eulerian_class(star) is EulerianClass.NEITHER


def test_reachability_sets():
    sets = reachability(NG_1)
    assert sets.s_fix == frozenset({0, 2})
    assert sets.s_move == frozenset({1})
    assert set_in_neighborhood(NG_1, sets.s_move) == frozenset()
    assert all(v in sets.reachable[v] for v in range(3))

    six = reachability(ORDER_SIX_ON_FOUR)
    assert six.s_fix == frozenset({0, 2, 3})
    assert six.s_move == frozenset({1})

    complete = digraph_from_arcs(3, [(i, j) for i in range(3) for j in range(3) if i != j])
    assert reachability(complete, fixed=[0]).s_fix == frozenset({0, 1, 2})


def test_symmetry():
    assert not is_symmetric(NG_1)
    assert is_symmetric(digraph_from_arcs(2, [(0, 1), (1, 0)]))


def test_connectivity_verdict_for_first_group():
    verdict = connectivity_verdict(NG_1)
    assert verdict.weakly_connected
    assert verdict.quasi_strongly_connected
    assert not verdict.strongly_connected
    assert verdict.roots == frozenset({1})
    assert verdict.witness == frozenset({1})


@settings(max_examples=200)
@given(digraphs)
def test_root_discovery_agrees_with_common_ancestor_test(d):
    quasi = is_quasi_strongly_connected(d)
    assert bool(roots(d)) == quasi
    found = find_root_by_elimination(d)
    assert (found is not None) == quasi


@settings(max_examples=100)
@given(digraphs)
def test_witness_search_agrees_with_components(d):
    verdict = connectivity_verdict(d)
    exhaustive = exhaustive_witness(d)
    assert (exhaustive is None) == verdict.strongly_connected
    if verdict.witness is not None:
        assert set_in_neighborhood(d, verdict.witness) == frozenset()


@settings(max_examples=100)
@given(st.integers(1, 8), st.sampled_from([0.1, 0.3, 0.5]), st.integers(0, 2**32 - 1))
def test_acyclic_digraphs_have_sources_and_sinks(n, density, seed):
    d = random_acyclic_digraph(n, density, np.random.default_rng(seed))
    assert is_acyclic(d)
    sources, sinks = sources_and_sinks(d)
    assert sources and sinks


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
