"""Handshaking-style degree sums over NG digraphs."""

from __future__ import annotations

import math
from typing import Any, Dict, Iterable, List, Optional, Set, Tuple

from ..digraph import Digraph, degree_profile
from ..models import Counterexample, NGGroup, PropositionId
from .base import RANDOM_SCOPE, ContextCheck


class NGHandshakingCheck(ContextCheck):
    proposition = PropositionId.P3_2
    statement = "The degree sum of every NG digraph is twice its arc count."

    def _digraph(self, subject: Any) -> Digraph:
        return self.context.digraph(subject) if isinstance(subject, NGGroup) else subject

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        d = self._digraph(subject)
        total = degree_profile(d, fixed=()).total
        if total == 2 * d.m:
            return None
        return self.violation(subject, scope, "sum of degrees == 2m", degree_sum=total, m=d.m)


class HandshakingCheck(NGHandshakingCheck):
    proposition = PropositionId.P3_1
    statement = "The degree sum of every digraph is twice its arc count."

    def extra_scopes(self) -> List[Tuple[str, Iterable[Any]]]:
        return [(RANDOM_SCOPE, self.context.random_digraphs())]


class GroupSumLawCheck(ContextCheck):
    proposition = PropositionId.P3_4
    statement = "The degree sum of an NG digraph is 2 n |NG|."

    def instances(self, n: int) -> Iterable[Any]:
        return self.context.sampled_groups(n)

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        total = self.context.profile(subject).total
        expected = 2 * subject.arity * subject.order
        if total == expected:
            return None
        return self.violation(
            subject, scope, "sum of degrees == 2 n |NG|", degree_sum=total, expected=expected
        )


class CaseSumCheck(GroupSumLawCheck):
    proposition = PropositionId.P4_1
    statement = "The degree sum is 2 n |NG| in every group-order case."

    def __init__(self, context: Any) -> None:
        super().__init__(context)
        self._case_sums: Dict[str, Dict[int, Set[int]]] = {}

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        sums = self._case_sums.setdefault(scope, {})
        sums.setdefault(subject.order, set()).add(self.context.profile(subject).total)
        return super().check(subject, scope)

    def notes(self) -> Dict[str, str]:
        notes: Dict[str, str] = {}
        for scope, by_order in sorted(self._case_sums.items()):
            notes[f"case sums {scope}"] = "; ".join(
                f"order {order}: {','.join(str(s) for s in sorted(totals))}"
                for order, totals in sorted(by_order.items())
            )
        return notes


class FactorialBoundCheck(ContextCheck):
    proposition = PropositionId.P4_9
    statement = "The degree sum of an NG digraph is at most 2 n!."

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        total = self.context.profile(subject).total
        bound = 2 * math.factorial(subject.arity)
        if total <= bound:
            return None
        return self.violation(subject, scope, "sum of degrees <= 2 n!", degree_sum=total, bound=bound)
