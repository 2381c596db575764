"""Connectivity, bipartiteness and Euler checks over NG and random digraphs."""

from __future__ import annotations

from typing import Any, Dict, Iterable, List, Optional, Tuple

import networkx as nx

from ..analysis import (
    EulerianClass,
    LoopPolicy,
    eulerian_class,
    find_root_by_elimination,
    is_acyclic,
    is_bipartite_underlying,
    is_quasi_strongly_connected,
    is_strongly_connected,
    odd_cycle,
    reachability,
    roots,
    set_in_neighborhood,
    sources_and_sinks,
)
from ..digraph import Digraph
from ..errors import InvariantViolation
from ..models import Counterexample, NGGroup, PropositionId
from .base import RANDOM_ACYCLIC_SCOPE, RANDOM_SCOPE, ContextCheck


class BipartiteCheck(ContextCheck):
    proposition = PropositionId.P3_5
    statement = "The underlying graph of an NG digraph is bipartite with only even circuits."

    def policies(self) -> List[LoopPolicy]:
        configured = self.context.config.verification.loop_policy
        if configured == "both":
            return [LoopPolicy.COUNT_AS_ODD_CYCLE, LoopPolicy.IGNORE]
        return [LoopPolicy(configured)]

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        d = self.context.digraph(subject)
        verdicts = {policy.value: is_bipartite_underlying(d, policy) for policy in self.policies()}
        if all(verdicts.values()):
            return None
        cycle = odd_cycle(d)
        return self.violation(
            subject,
            scope,
            "underlying graph is bipartite",
            bipartite=verdicts,
            odd_cycle=self.context.points(cycle, d.n) if cycle else None,
            loops=self.context.points(
                [v for v in range(d.n) if d.has_arc(v, v)], d.n
            ),
        )


def _networkx_eulerian_class(d: Digraph) -> EulerianClass:
    graph = d.to_multigraph()
    if not nx.is_connected(graph):
        return EulerianClass.DISCONNECTED
    if nx.is_eulerian(graph):
        return EulerianClass.EULERIAN
    if nx.has_eulerian_path(graph):
        return EulerianClass.SEMI_EULERIAN
    return EulerianClass.NEITHER


class EulerCriterionCheck(ContextCheck):
    proposition = PropositionId.P3_6_EULER
    statement = (
        "An NG digraph is Eulerian exactly when every degree is even; "
        "on three points it is semi-Eulerian."
    )

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        d = self.context.digraph(subject)
        by_parity = eulerian_class(d)
        by_networkx = _networkx_eulerian_class(d)
        if by_parity is not by_networkx:
            return self.violation(
                subject,
                scope,
                "degree-parity class matches the Euler trail search",
                parity=by_parity.value,
                trail_search=by_networkx.value,
            )
        if subject.arity == 3 and by_parity is not EulerianClass.SEMI_EULERIAN:
            return self.violation(
                subject, scope, "semi-Eulerian on three points", observed=by_parity.value
            )
        return None


class RootQuasiStrongCheck(ContextCheck):
    proposition = PropositionId.P3_6_ROOT
    statement = "A digraph has a root exactly when it is quasi-strongly connected."

    def extra_scopes(self) -> List[Tuple[str, Iterable[Any]]]:
        return [(RANDOM_SCOPE, self.context.random_digraphs())]

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        d = self.context.digraph(subject) if isinstance(subject, NGGroup) else subject
        found = roots(d)
        try:
            quasi = is_quasi_strongly_connected(d)
        except InvariantViolation as exc:
            return self.violation(
                subject,
                scope,
                "roots, elimination and common-ancestor tests agree",
                roots=self.context.points(found, d.n),
                elimination=find_root_by_elimination(d),
                detail=str(exc),
            )
        if bool(found) == quasi:
            return None
        return self.violation(
            subject,
            scope,
            "roots nonempty <=> quasi-strongly connected",
            roots=self.context.points(found, d.n),
            quasi_strongly_connected=quasi,
        )


class AcyclicSourceSinkCheck(ContextCheck):
    proposition = PropositionId.P4_7
    statement = "An acyclic digraph has at least one source and one sink."

    def applies_to(self, n: int) -> bool:
        return False

    def instances(self, n: int) -> Iterable[Any]:
        return []

    def extra_scopes(self) -> List[Tuple[str, Iterable[Any]]]:
        return [(RANDOM_ACYCLIC_SCOPE, self.context.random_acyclic_digraphs())]

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        if not is_acyclic(subject):
            return self.violation(subject, scope, "generated digraph is acyclic")
        sources, sinks = sources_and_sinks(subject)
        if sources and sinks:
            return None
        return self.violation(
            subject,
            scope,
            "at least one source and one sink",
            sources=self.context.points(sources, subject.n),
            sinks=self.context.points(sinks, subject.n),
        )


class StrongConnectivityCheck(ContextCheck):
    proposition = PropositionId.P4_12
    statement = "No NG digraph is strongly connected."

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        d = self.context.digraph(subject)
        try:
            verdict = is_strongly_connected(d)
        except InvariantViolation as exc:
            return self.violation(
                subject, scope, "component and witness tests agree", detail=str(exc)
            )
        moved = frozenset(range(d.n)) - self.context.census(subject).ng_fix.members
        if not verdict.strongly_connected and verdict.witness == moved:
            return None
        return self.violation(
            subject,
            scope,
            "not strongly connected, witnessed by the moved points",
            strongly_connected=verdict.strongly_connected,
            witness=self.context.points(verdict.witness or (), d.n),
            moved=self.context.points(moved, d.n),
        )


class MovedUnreachableCheck(ContextCheck):
    proposition = PropositionId.MOVED_UNREACHABLE
    statement = "No path leads from a fixed point to a moved point, and moved points have no in-arcs."

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        d = self.context.digraph(subject)
        sets = reachability(d)
        ng_fix = self.context.census(subject).ng_fix.members
        incoming = set_in_neighborhood(d, sets.s_move)
        if sets.s_fix == ng_fix and sets.s_move and not incoming:
            return None
        observed: Dict[str, Any] = {
            "s_fix": self.context.points(sets.s_fix, d.n),
            "s_move": self.context.points(sets.s_move, d.n),
            "in_neighborhood": self.context.points(incoming, d.n),
        }
        return self.violation(subject, scope, "S_fix == ng_fix and in-neighborhood(S_move) empty", **observed)


class NoIsolatedVertexCheck(ContextCheck):
    proposition = PropositionId.NO_ISOLATED_VERTEX
    statement = "An NG digraph has no isolated vertex and contains a circuit."

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        d = self.context.digraph(subject)
        profile = self.context.profile(subject)
        acyclic = is_acyclic(d)
        if profile.delta_min > 0 and not acyclic:
            return None
        return self.violation(
            subject,
            scope,
            "minimum degree positive and not circuitless",
            delta_min=profile.delta_min,
            acyclic=acyclic,
        )
