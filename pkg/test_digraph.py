#!/usr/bin/env python3
"""Tests for union digraph construction and degree profiles."""

import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ngdigraph.digraph import Digraph, UnionDigraph, build_digraph, degree_profile, size_pair
from ngdigraph.errors import DomainError
from ngdigraph.generators import digraph_family, random_acyclic_digraph, random_digraph
from ngdigraph.groups import enumerate_ng_groups, h_class_group
from ngdigraph.models import Transformation
from ngdigraph.transformations import parse_transformation_set

NG_1 = "{(a,a,c),(c,c,a)}"


def digraph_of(text: str) -> UnionDigraph:
    return build_digraph(parse_transformation_set(text))


def test_first_three_point_group_profile():
    d = digraph_of(NG_1)
    profile = degree_profile(d)
    assert size_pair(d) == (3, 6)
    assert d.arc_counts.tolist() == [[1, 0, 1], [1, 0, 1], [1, 0, 1]]
    assert profile.degrees == (5, 2, 5)
    assert (profile.delta_min, profile.delta_max) == (2, 5)
    assert profile.total == 12
    assert d.fixed_vertices == frozenset({0, 2})
    assert profile.fix_degrees == {0: 5, 2: 5}
    assert profile.fix_degree == 5


@pytest.mark.parametrize(
    "text, row, degrees",
    [
        ("{(a,b,a),(b,a,b)}", [1, 1, 0], (5, 5, 2)),
        ("{(a,b,b),(b,a,a)}", [1, 1, 0], (5, 5, 2)),
        ("{(b,b,c),(c,c,b)}", [0, 1, 1], (2, 5, 5)),
        ("{(b,c,b),(c,b,c)}", [0, 1, 1], (2, 5, 5)),
    ],
)
def test_other_three_point_groups(text, row, degrees):
    d = digraph_of(text)
    assert d.arc_counts.tolist() == [row] * 3
    assert degree_profile(d).degrees == degrees


def test_four_point_order_two_example():
    d = digraph_of("{(1,1,4,4),(4,4,1,1)}")
    profile = degree_profile(d)
    assert profile.total == 16
    assert profile.degrees == (6, 2, 2, 6)
    assert (profile.delta_min, profile.delta_max) == (2, 6)


def test_four_point_order_six_example():
    group = h_class_group(Transformation((0, 0, 2, 3)))
    d = build_digraph(group)
    profile = degree_profile(d)
    assert size_pair(d) == (4, 24)
    assert profile.total == 48
    assert profile.degrees == (14, 6, 14, 14)
    assert d.fixed_vertices == frozenset({0, 2, 3})
    listed = parse_transformation_set(
        "{(1,1,3,4),(1,1,4,3),(3,3,1,4),(3,3,4,1),(4,4,1,3),(4,4,3,1)}"
    )
    assert set(listed) == set(group.elements)


def test_order_four_candidate_matrix_is_doubled():
    d = digraph_of("{(1,1,4,4),(4,4,1,1),(1,4,1,4),(4,1,4,1)}")
    assert d.arc_counts.tolist() == [[2, 0, 0, 2]] * 4


def test_loops_count_once_each_way():
    d = build_digraph([Transformation((0,))])
    profile = degree_profile(d)
    assert profile.out_degrees == (1,)
    assert profile.in_degrees == (1,)
    assert profile.degrees == (2,)


def test_isolated_and_pendant_vertices():
    d = Digraph(3, np.array([[0, 1, 0], [0, 0, 0], [0, 0, 0]]))
    profile = degree_profile(d)
    assert profile.isolated == frozenset({2})
    assert profile.pendant == frozenset({0, 1})
    assert profile.fix_degree is None


def test_digraph_validation():
    with pytest.raises(DomainError):
        Digraph(2, np.zeros((3, 3), dtype=int))
    with pytest.raises(DomainError):
        Digraph(2, np.array([[0, -1], [0, 0]]))
    with pytest.raises(DomainError):
        build_digraph([Transformation((0, 0)), Transformation((0, 0, 0))])


def test_arc_counts_are_read_only():
    d = digraph_of(NG_1)
    with pytest.raises(ValueError):
        d.arc_counts[0, 0] = 5


def test_networkx_views_keep_multiplicity():
    d = digraph_of("{(1,1,4,4),(4,4,1,1),(1,4,1,4),(4,1,4,1)}")
    assert d.to_networkx().number_of_edges() == 16
    assert d.to_multigraph().number_of_edges() == 16


def test_every_ng_digraph_has_group_size_rows():
    for group in enumerate_ng_groups(4):
        d = build_digraph(group)
        assert (d.out_degrees() == group.order).all()
        assert d.m == group.arity * group.order


@settings(max_examples=50)
@given(st.integers(2, 8), st.sampled_from([0.1, 0.3, 0.5]), st.integers(0, 2**32 - 1))
def test_random_digraph_handshake(n, density, seed):
    d = random_digraph(n, density, np.random.default_rng(seed))
    assert degree_profile(d, fixed=()).total == 2 * d.m
    assert not np.diagonal(d.arc_counts).any()


def test_digraph_family_is_seeded():
    first = list(digraph_family(20, [0.1, 0.3, 0.5], 2, 8, seed=7))
    second = list(digraph_family(20, [0.1, 0.3, 0.5], 2, 8, seed=7))
    assert first == second
    assert all(2 <= d.n <= 8 for d in first)


def test_random_acyclic_digraph_has_no_mutual_arcs():
    d = random_acyclic_digraph(6, 0.5, np.random.default_rng(3))
    assert not (d.arc_counts * d.arc_counts.T).any()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
