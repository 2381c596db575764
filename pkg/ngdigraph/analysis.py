"""Digraph predicates: connectivity, roots, circuits, bipartiteness, Euler parity.

A loop is a directed circuit of length one, so any digraph with a loop is
cyclic. Reachability is reflexive: every vertex reaches itself by the empty
path.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Optional, Tuple

import networkx as nx
import numpy as np

from .digraph import Digraph, UnionDigraph, degree_profile
from .errors import DomainError, InvariantViolation

logger = logging.getLogger(__name__)

EXHAUSTIVE_WITNESS_LIMIT = 12


class LoopPolicy(str, Enum):
    COUNT_AS_ODD_CYCLE = "count-as-odd-cycle"
    IGNORE = "ignore"


class EulerianClass(str, Enum):
    EULERIAN = "eulerian"
    SEMI_EULERIAN = "semi-eulerian"
    NEITHER = "neither"
    DISCONNECTED = "disconnected"


@dataclass(frozen=True)
class ReachabilitySets:
    reachable: Tuple[FrozenSet[int], ...]
    s_fix: FrozenSet[int]
    s_move: FrozenSet[int]


@dataclass(frozen=True)
class StrongConnectivity:
    strongly_connected: bool
    witness: Optional[FrozenSet[int]] = None


@dataclass(frozen=True)
class ConnectivityVerdict:
    weakly_connected: bool
    strongly_connected: bool
    quasi_strongly_connected: bool
    roots: FrozenSet[int]
    witness: Optional[FrozenSet[int]] = None


def _vertex_set(d: Digraph, vertices: Iterable[int]) -> FrozenSet[int]:
    members = frozenset(vertices)
    if any(not 0 <= v < d.n for v in members):
        raise DomainError(f"Vertex set {sorted(members)} is not inside [0, {d.n})")
    return members


def set_out_neighborhood(d: Digraph, vertices: Iterable[int]) -> FrozenSet[int]:
    inside = _vertex_set(d, vertices)
    return frozenset(
        w for w in range(d.n) if w not in inside and any(d.has_arc(v, w) for v in inside)
    )


def set_in_neighborhood(d: Digraph, vertices: Iterable[int]) -> FrozenSet[int]:
    inside = _vertex_set(d, vertices)
    return frozenset(
        w for w in range(d.n) if w not in inside and any(d.has_arc(w, v) for v in inside)
    )


def reachability_matrix(d: Digraph) -> np.ndarray:
    """Boolean transitive-reflexive closure; entry (u, v) means u reaches v."""
    reach = (d.arc_counts > 0) | np.eye(d.n, dtype=bool)
    for k in range(d.n):
        reach |= reach[:, k : k + 1] & reach[k : k + 1, :]
    return reach


def reachability(d: Digraph, fixed: Optional[Iterable[int]] = None) -> ReachabilitySets:
    if fixed is None:
        fixed = d.fixed_vertices if isinstance(d, UnionDigraph) else ()
    reach = reachability_matrix(d)
    rows = tuple(frozenset(int(v) for v in np.nonzero(reach[u])[0]) for u in range(d.n))
    s_fix: FrozenSet[int] = frozenset().union(*(rows[v] for v in _vertex_set(d, fixed)))
    return ReachabilitySets(
        reachable=rows,
        s_fix=s_fix,
        s_move=frozenset(range(d.n)) - s_fix,
    )


def _structured_witness(d: Digraph, reach: np.ndarray) -> Optional[FrozenSet[int]]:
    everything = frozenset(range(d.n))
    on_circuit = [
        v for v in range(d.n) if any(d.has_arc(v, u) and reach[u, v] for u in range(d.n))
    ]
    if on_circuit:
        downstream = frozenset(int(w) for w in np.nonzero(reach[on_circuit].any(axis=0))[0])
        if downstream != everything:
            return everything - downstream
    for v in range(d.n):
        if not reach[v].all():
            return everything - frozenset(int(w) for w in np.nonzero(reach[v])[0])
    return None


def exhaustive_witness(d: Digraph) -> Optional[FrozenSet[int]]:
    """Smallest proper nonempty vertex set with no arc entering it, if any."""
    if d.n > EXHAUSTIVE_WITNESS_LIMIT:
        raise DomainError(f"Exhaustive witness search is limited to {EXHAUSTIVE_WITNESS_LIMIT} vertices")
    for size in range(1, d.n):
        for subset in itertools.combinations(range(d.n), size):
            if not set_in_neighborhood(d, subset):
                return frozenset(subset)
    return None


def is_strongly_connected(d: Digraph) -> StrongConnectivity:
    """Strong connectivity by SCC count, cross-checked against a witness set."""
    by_components = nx.number_strongly_connected_components(d.to_networkx()) == 1
    witness = _structured_witness(d, reachability_matrix(d))
    if witness is not None and set_in_neighborhood(d, witness):
        raise InvariantViolation(f"Witness {sorted(witness)} has incoming arcs")
    if by_components != (witness is None):
        raise InvariantViolation(
            f"SCC analysis says strongly_connected={by_components} but witness={witness}"
        )
    return StrongConnectivity(by_components, witness)


def roots(d: Digraph) -> FrozenSet[int]:
    reach = reachability_matrix(d)
    return frozenset(v for v in range(d.n) if reach[v].all())


def find_root_by_elimination(d: Digraph) -> Optional[int]:
    """Discover a root by shrinking a candidate set.

    Candidates reachable from another candidate are dropped; two unrelated
    candidates are replaced by a common ancestor. A single survivor reaches
    every vertex. Returns None when some unrelated pair has no common ancestor.
    """
    reach = reachability_matrix(d)
    candidates = list(range(d.n))
    while True:
        pruned = True
        while pruned:
            pruned = False
            for v in candidates:
                if any(u != v and reach[u, v] for u in candidates):
                    candidates.remove(v)
                    pruned = True
                    break
        if len(candidates) == 1:
            return candidates[0]
        u, v = candidates[0], candidates[1]
        ancestor = next((w for w in range(d.n) if reach[w, u] and reach[w, v]), None)
        if ancestor is None:
            return None
        candidates.remove(u)
        candidates.remove(v)
        candidates.append(ancestor)


def is_quasi_strongly_connected(d: Digraph) -> bool:
    """Every pair is equal, joined by a path either way, or has a common ancestor."""
    reach = reachability_matrix(d)
    same = np.eye(d.n, dtype=bool)
    common_ancestor = (reach.T.astype(np.int64) @ reach.astype(np.int64)) > 0
    quasi = bool((same | reach | reach.T | common_ancestor).all())

    found_roots = roots(d)
    eliminated = find_root_by_elimination(d)
    if quasi != bool(found_roots) or (eliminated is not None) != quasi:
        raise InvariantViolation(
            f"quasi={quasi} roots={sorted(found_roots)} elimination={eliminated}"
        )
    if eliminated is not None and eliminated not in found_roots:
        raise InvariantViolation(f"Elimination returned non-root {eliminated}")
    return quasi


def is_weakly_connected(d: Digraph) -> bool:
    return nx.is_weakly_connected(d.to_networkx())


def sources_and_sinks(d: Digraph) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    in_deg = d.in_degrees()
    out_deg = d.out_degrees()
    sources = frozenset(v for v in range(d.n) if in_deg[v] == 0)
    sinks = frozenset(v for v in range(d.n) if out_deg[v] == 0)
    return sources, sinks


def is_acyclic(d: Digraph) -> bool:
    return nx.is_directed_acyclic_graph(d.to_networkx())


def has_two_way_pair(d: Digraph, within: Iterable[int]) -> Optional[Tuple[int, int]]:
    members = sorted(_vertex_set(d, within))
    for u, v in itertools.combinations(members, 2):
        if d.has_arc(u, v) and d.has_arc(v, u):
            return u, v
    return None


def _simple_underlying(d: Digraph) -> nx.Graph:
    underlying = nx.Graph()
    underlying.add_nodes_from(range(d.n))
    underlying.add_edges_from((i, j) for i, j, _ in d.arcs() if i != j)
    return underlying


def is_bipartite_underlying(
    d: Digraph, loop_policy: LoopPolicy = LoopPolicy.COUNT_AS_ODD_CYCLE
) -> bool:
    loop_policy = LoopPolicy(loop_policy)
    if loop_policy is LoopPolicy.COUNT_AS_ODD_CYCLE and np.diagonal(d.arc_counts).any():
        return False
    return nx.is_bipartite(_simple_underlying(d))


def eulerian_class(d: Digraph) -> EulerianClass:
    """Parity classification of the underlying multigraph (loops add two)."""
    if not is_weakly_connected(d):
        return EulerianClass.DISCONNECTED
    odd = sum(1 for deg in degree_profile(d, fixed=()).degrees if deg % 2)
    if odd == 0:
        return EulerianClass.EULERIAN
    if odd == 2:
        return EulerianClass.SEMI_EULERIAN
    return EulerianClass.NEITHER


def is_symmetric(d: Digraph) -> bool:
    return bool(np.array_equal(d.arc_counts, d.arc_counts.T))


def connectivity_verdict(d: Digraph) -> ConnectivityVerdict:
    strong = is_strongly_connected(d)
    quasi = is_quasi_strongly_connected(d)
    weak = is_weakly_connected(d)
    if (strong.strongly_connected and not quasi) or (quasi and not weak):
        raise InvariantViolation(
            f"Connectivity hierarchy broken: strong={strong.strongly_connected} "
            f"quasi={quasi} weak={weak}"
        )
    return ConnectivityVerdict(
        weakly_connected=weak,
        strongly_connected=strong.strongly_connected,
        quasi_strongly_connected=quasi,
        roots=roots(d),
        witness=strong.witness,
    )


def odd_cycle(d: Digraph) -> Optional[Tuple[int, ...]]:
    """An odd cycle of the loop-free underlying graph, if one exists.

    A graph whose cycle basis is all even has only even cycles, so scanning the
    basis is enough.
    """
    for cycle in nx.cycle_basis(_simple_underlying(d)):
        if len(cycle) % 2:
            return tuple(sorted(cycle))
    return None
