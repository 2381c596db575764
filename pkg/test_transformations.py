#!/usr/bin/env python3
"""Tests for transformation values, composition and tuple parsing."""

import sys

import pytest
from hypothesis import given, strategies as st

from ngdigraph.errors import DomainError, ParseError, ResourceLimitError
from ngdigraph.models import Transformation
from ngdigraph.transformations import (
    compose,
    enumerate_all,
    fixed_points,
    format_set,
    format_transformation,
    identity,
    image,
    is_idempotent,
    is_permutation,
    kernel,
    moved_points,
    parse_transformation,
    parse_transformation_set,
    rank,
)


def maps_on(n: int) -> st.SearchStrategy:
    return st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(
        lambda images: Transformation(tuple(images))
    )


arities = st.integers(1, 6)
map_triples = arities.flatmap(lambda n: st.tuples(maps_on(n), maps_on(n), maps_on(n)))
single_maps = arities.flatmap(maps_on)


def test_compose_applies_right_argument_first():
    f = Transformation((2, 2, 0))
    g = Transformation((0, 0, 2))
    assert compose(f, g) == Transformation((2, 2, 0))
    assert compose(g, f) == Transformation((2, 2, 0))
    assert compose(f, f) == Transformation((0, 0, 2))


def test_compose_rejects_mixed_arity():
    with pytest.raises(DomainError):
        compose(identity(3), identity(4))


def test_transformation_rejects_out_of_range_images():
    with pytest.raises(DomainError):
        Transformation((0, 3, 1))
    with pytest.raises(DomainError):
        Transformation(())


def test_enumerate_all_counts():
    """27 maps on three points and 256 on four."""
    assert sum(1 for _ in enumerate_all(3)) == 27
    assert sum(1 for _ in enumerate_all(4)) == 256
    for n, total in ((1, 1), (2, 4), (3, 27)):
        maps = list(enumerate_all(n))
        assert len(maps) == len(set(maps)) == total
    first = next(enumerate_all(3))
    assert first == Transformation((0, 0, 0))


def test_enumerate_all_respects_cap():
    with pytest.raises(ResourceLimitError):
        list(enumerate_all(9))
    with pytest.raises(ResourceLimitError):
        list(enumerate_all(4, cap=3))


def test_fixed_and_moved_points():
    f = Transformation((0, 0, 2))
    assert fixed_points(f).to_list() == [0, 2]
    assert moved_points(f).to_list() == [1]
    g = Transformation((2, 2, 0))
    assert len(fixed_points(g)) == 0


def test_image_kernel_rank():
    f = Transformation((0, 0, 3, 3))
    assert image(f).to_list() == [0, 3]
    assert kernel(f).sorted_blocks() == [[0, 1], [2, 3]]
    assert rank(f) == 2
    assert not is_permutation(f)
    assert is_permutation(identity(4))


def test_idempotents():
    assert is_idempotent(Transformation((0, 0, 2)))
    assert not is_idempotent(Transformation((2, 2, 0)))
    assert is_idempotent(identity(5))


def test_parse_letters_and_numbers():
    assert parse_transformation("(a,a,c)") == Transformation((0, 0, 2))
    assert parse_transformation("(1,1,4,4)") == Transformation((0, 0, 3, 3))
    assert parse_transformation(" ( c , c , a ) ") == Transformation((2, 2, 0))


def test_parse_rejects_out_of_range_symbol_with_position():
    with pytest.raises(ParseError) as info:
        parse_transformation("(a,d,c)")
    assert info.value.position == 3
    with pytest.raises(ParseError):
        parse_transformation("(1,5,2,3)")


def test_parse_rejects_mixed_styles_and_junk():
    with pytest.raises(ParseError):
        parse_transformation("(a,1,c)")
    with pytest.raises(ParseError):
        parse_transformation("a,a,c")
    with pytest.raises(ParseError):
        parse_transformation("(a,,c)")
    with pytest.raises(ParseError):
        parse_transformation("(a,?,c)")


def test_parse_transformation_set():
    elements = parse_transformation_set("{(a,a,c),(c,c,a)}")
    assert elements == [Transformation((0, 0, 2)), Transformation((2, 2, 0))]
    with pytest.raises(ParseError):
        parse_transformation_set("{(a,a,c),(a,b)}")
    with pytest.raises(ParseError):
        parse_transformation_set("{}")
    with pytest.raises(ParseError) as unterminated:
        parse_transformation_set("{(a,a,c),(c,c,a}")
    assert unterminated.value.position == 9
    with pytest.raises(ParseError) as stray:
        parse_transformation_set("{(a,a,c), hello (c,c,a)}")
    assert stray.value.position == 10
    assert parse_transformation_set("(1,1,3); (3,3,1)\n") == elements


def test_format_styles():
    f = Transformation((0, 0, 3, 3))
    assert format_transformation(f, "letters") == "(a,a,d,d)"
    assert format_transformation(f) == "(1,1,4,4)"
    assert format_set([Transformation((2, 2, 0)), Transformation((0, 0, 2))], "letters") == (
        "{(a,a,c),(c,c,a)}"
    )


@given(map_triples)
def test_composition_is_associative(triple):
    f, g, h = triple
    assert compose(f, compose(g, h)) == compose(compose(f, g), h)


@given(arities.flatmap(lambda n: st.tuples(maps_on(n), maps_on(n))))
def test_rank_never_grows_under_composition(pair):
    f, g = pair
    assert rank(compose(f, g)) <= min(rank(f), rank(g))


@given(single_maps)
def test_fixed_points_lie_in_image(f):
    assert fixed_points(f).members <= image(f).members


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_idempotent_exactly_when_fixed_points_equal_image(n):
    for f in enumerate_all(n):
        assert is_idempotent(f) == (fixed_points(f) == image(f))


def test_every_three_point_map_parses_back():
    for f in enumerate_all(3):
        assert parse_transformation(format_transformation(f)) == f
        assert parse_transformation(format_transformation(f, "letters")) == f


@given(single_maps)
def test_numeric_and_letter_renderings_parse_back(f):
    assert parse_transformation(format_transformation(f)) == f
    assert parse_transformation(format_transformation(f, "letters")) == f


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
