"""Union functional digraphs and their degree profiles.

Arcs are counted with multiplicity. A loop adds one to the out-degree and one
to the in-degree of its vertex, so it contributes two to the total degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

import networkx as nx
import numpy as np

from .errors import DomainError
from .models import NGGroup, Transformation
from .transformations import is_idempotent, uniform_arity


@dataclass(frozen=True, eq=False)
class Digraph:
    """A finite multidigraph on vertices ``0..n-1`` given by arc counts."""

    n: int
    arc_counts: np.ndarray

    def __post_init__(self) -> None:
        counts = np.array(self.arc_counts, dtype=np.int64)
        if self.n < 1 or counts.shape != (self.n, self.n):
            raise DomainError(f"arc_counts must be a {self.n}x{self.n} matrix")
        if (counts < 0).any():
            raise DomainError("arc_counts must be nonnegative")
        counts.setflags(write=False)
        object.__setattr__(self, "arc_counts", counts)

    @property
    def m(self) -> int:
        return int(self.arc_counts.sum())

    def out_degrees(self) -> np.ndarray:
        return self.arc_counts.sum(axis=1)

    def in_degrees(self) -> np.ndarray:
        return self.arc_counts.sum(axis=0)

    def arcs(self) -> Iterator[Tuple[int, int, int]]:
        for i, j in zip(*np.nonzero(self.arc_counts)):
            yield int(i), int(j), int(self.arc_counts[i, j])

    def successors(self, v: int) -> List[int]:
        return [int(j) for j in np.nonzero(self.arc_counts[v])[0]]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.arc_counts[u, v])

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.n))
        for i, j, count in self.arcs():
            graph.add_edges_from([(i, j)] * count)
        return graph

    def to_multigraph(self) -> nx.MultiGraph:
        """Underlying undirected multigraph; each arc becomes its own edge."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        for i, j, count in self.arcs():
            graph.add_edges_from([(i, j)] * count)
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.arc_counts, other.arc_counts)

    def __hash__(self) -> int:
        return hash((self.n, self.arc_counts.tobytes()))


@dataclass(frozen=True, eq=False)
class UnionDigraph(Digraph):
    """Digraph with one arc ``x -> f(x)`` per source map ``f`` and point ``x``."""

    source_size: int = 0
    fixed_vertices: FrozenSet[int] = frozenset()

    def __post_init__(self) -> None:
        super().__post_init__()
        object.__setattr__(self, "fixed_vertices", frozenset(self.fixed_vertices))
        if (self.out_degrees() != self.source_size).any():
            raise DomainError("Every row of a union digraph sums to the source size")


@dataclass(frozen=True)
class DegreeProfile:
    out_degrees: Tuple[int, ...]
    in_degrees: Tuple[int, ...]
    degrees: Tuple[int, ...]
    delta_min: int
    delta_max: int
    fix_degrees: Dict[int, int] = field(default_factory=dict)
    isolated: FrozenSet[int] = frozenset()
    pendant: FrozenSet[int] = frozenset()

    @property
    def total(self) -> int:
        return sum(self.degrees)

    @property
    def fix_degree(self) -> Optional[int]:
        """The common degree of the fixed vertices, when they all agree."""
        values = set(self.fix_degrees.values())
        return values.pop() if len(values) == 1 else None


def build_digraph(source: Union[NGGroup, Iterable[Transformation]]) -> UnionDigraph:
    elements = sorted(set(source))
    n = uniform_arity(elements)
    counts = np.zeros((n, n), dtype=np.int64)
    fixed: set = set()
    for f in elements:
        counts[np.arange(n), np.array(f.images)] += 1
        if is_idempotent(f):
            fixed.update(f.images)
    return UnionDigraph(n, counts, source_size=len(elements), fixed_vertices=frozenset(fixed))


def adjacency_matrix(d: Digraph) -> np.ndarray:
    return d.arc_counts


def degree_profile(d: Digraph, fixed: Optional[Iterable[int]] = None) -> DegreeProfile:
    if fixed is None:
        fixed = d.fixed_vertices if isinstance(d, UnionDigraph) else ()
    out_deg = [int(x) for x in d.out_degrees()]
    in_deg = [int(x) for x in d.in_degrees()]
    total = [o + i for o, i in zip(out_deg, in_deg)]
    return DegreeProfile(
        out_degrees=tuple(out_deg),
        in_degrees=tuple(in_deg),
        degrees=tuple(total),
        delta_min=min(total),
        delta_max=max(total),
        fix_degrees={v: total[v] for v in sorted(fixed)},
        isolated=frozenset(v for v, deg in enumerate(total) if deg == 0),
        pendant=frozenset(v for v, deg in enumerate(total) if deg == 1),
    )


def size_pair(d: Digraph) -> Tuple[int, int]:
    return d.n, d.m
