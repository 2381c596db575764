"""Checks phrased in terms of fixed points, orbits and stabilizers."""

from __future__ import annotations

from typing import Any, Iterable, Optional

from ..analysis import has_two_way_pair
from ..groups import orbit, stabilizer
from ..models import Counterexample, PropositionId
from ..transformations import fixed_points, format_transformation, moved_points
from .base import ContextCheck


class FixedPairCircuitCheck(ContextCheck):
    proposition = PropositionId.P3_3
    statement = "Every nontrivial NG digraph has a two-way arc pair between fixed points."

    def instances(self, n: int) -> Iterable[Any]:
        return [group for group in self.context.groups(n) if group.order >= 2]

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        ng_fix = self.context.census(subject).ng_fix
        if has_two_way_pair(self.context.digraph(subject), ng_fix) is not None:
            return None
        return self.violation(
            subject,
            scope,
            "two-way arc pair inside ng_fix",
            ng_fix=self.context.points(ng_fix, subject.arity),
        )


class _FixedCountCheck(ContextCheck):
    def fixed_counts(self, subject: Any) -> dict:
        style = self.context.style(subject.arity)
        return {
            format_transformation(f, style): count
            for f, count in sorted(self.context.census(subject).fixed_counts.items())
        }


class FixedPointDifferenceCheck(_FixedCountCheck):
    proposition = PropositionId.P4_3
    statement = "The two elements of an order-2 NG-group differ by two fixed points."

    def instances(self, n: int) -> Iterable[Any]:
        return [group for group in self.context.groups(n) if group.order == 2]

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        first, second = sorted(self.context.census(subject).fixed_counts.values())
        diff = second - first
        total = self.context.profile(subject).total
        expected_total = 2 * subject.arity * diff
        if diff == 2 and total == expected_total:
            return None
        return self.violation(
            subject,
            scope,
            "| |f_fix| - |g_fix| | == 2 and sum of degrees == 2 n diff",
            fixed_counts=self.fixed_counts(subject),
            difference=diff,
            degree_sum=total,
            two_n_diff=expected_total,
        )


class ThreePointStructureCheck(_FixedCountCheck):
    proposition = PropositionId.P4_5
    statement = (
        "An order-2 NG-group on three points has an element with two fixed points "
        "whose moved point maps onto one of them."
    )

    def applies_to(self, n: int) -> bool:
        return n == 3

    def instances(self, n: int) -> Iterable[Any]:
        if not self.applies_to(n):
            return []
        return [group for group in self.context.groups(n) if group.order == 2]

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        for f in subject:
            fixed = fixed_points(f)
            moved = moved_points(f)
            if len(fixed) == 2 and all(f(x) in fixed for x in moved):
                return None
        return self.violation(
            subject,
            scope,
            "some element fixes two points and sends the third into them",
            fixed_counts=self.fixed_counts(subject),
        )


class SingleFixedPointCheck(_FixedCountCheck):
    proposition = PropositionId.P4_6a
    statement = "Every NG-group has an element with exactly one fixed point."
    wanted = 1

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        counts = self.context.census(subject).fixed_counts.values()
        if any(count == self.wanted for count in counts):
            return None
        return self.violation(
            subject,
            scope,
            f"some element has exactly {self.wanted} fixed points",
            fixed_counts=self.fixed_counts(subject),
        )


class FixedPointFreeCheck(SingleFixedPointCheck):
    proposition = PropositionId.P4_6b
    statement = "Every NG-group has an element without fixed points."
    wanted = 0


class OrbitStabilizerCheck(ContextCheck):
    proposition = PropositionId.P4_11
    statement = "|stabilizer(i)| * |orbit(i)| = |NG| for every fixed point i."

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        for point in self.context.census(subject).ng_fix:
            stab = len(stabilizer(subject, point))
            orb = len(orbit(subject, point))
            if stab * orb != subject.order:
                return self.violation(
                    subject,
                    scope,
                    "|stabilizer| * |orbit| == |NG|",
                    point=self.context.points([point], subject.arity)[0],
                    stabilizer=stab,
                    orbit=orb,
                    order=subject.order,
                )
        return None
