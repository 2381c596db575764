"""Seeded random digraph families for predicate sweeps beyond NG digraphs."""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .digraph import Digraph


def random_digraph(
    n: int, density: float, rng: np.random.Generator, loops: bool = False
) -> Digraph:
    """Include each arc (i, j) independently with probability ``density``."""
    mask = rng.random((n, n)) < density
    if not loops:
        np.fill_diagonal(mask, False)
    return Digraph(n, mask.astype(np.int64))


def random_acyclic_digraph(n: int, density: float, rng: np.random.Generator) -> Digraph:
    """Random arcs oriented along a random vertex order, so no circuit exists."""
    position = np.empty(n, dtype=np.int64)
    position[rng.permutation(n)] = np.arange(n)
    forward = position[:, None] < position[None, :]
    mask = (rng.random((n, n)) < density) & forward
    return Digraph(n, mask.astype(np.int64))


def digraph_family(
    count: int,
    densities: Sequence[float],
    min_vertices: int,
    max_vertices: int,
    seed: int,
    acyclic: bool = False,
) -> Iterator[Digraph]:
    """``count`` digraphs cycling through ``densities`` with random vertex counts."""
    rng = np.random.default_rng(seed)
    for index in range(count):
        density = densities[index % len(densities)]
        n = int(rng.integers(min_vertices, max_vertices + 1))
        if acyclic:
            yield random_acyclic_digraph(n, density, rng)
        else:
            yield random_digraph(n, density, rng)
