"""Utilities shared across proposition check implementations."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple, Type

import numpy as np

from ..config import AppConfig
from ..digraph import DegreeProfile, Digraph, UnionDigraph, build_digraph, degree_profile
from ..generators import digraph_family
from ..groups import GroupCensus, enumerate_ng_groups, group_census
from ..interfaces import PropositionCheck
from ..models import Counterexample, NGGroup, PropositionId
from ..transformations import format_point, format_set, resolve_style

logger = logging.getLogger(__name__)

RANDOM_SCOPE = "random"
RANDOM_ACYCLIC_SCOPE = "random-acyclic"


class SweepContext:
    """Per-run cache of enumerated groups, their digraphs and generated families."""

    def __init__(self, config: AppConfig) -> None:
        self.config = config
        self._groups: Dict[int, List[NGGroup]] = {}
        self._digraphs: Dict[Tuple[Tuple[int, ...], ...], UnionDigraph] = {}
        self._random: Optional[List[Digraph]] = None
        self._acyclic: Optional[List[Digraph]] = None

    def groups(self, n: int) -> List[NGGroup]:
        if n not in self._groups:
            self._groups[n] = enumerate_ng_groups(
                n,
                include_trivial=self.config.enumeration.include_trivial,
                config=self.config.enumeration,
            )
        return self._groups[n]

    def sampled_groups(self, n: int) -> List[NGGroup]:
        """All groups below the sampling arity, else a seeded sample."""
        verification = self.config.verification
        groups = self.groups(n)
        if n < verification.sample_from_arity or len(groups) <= verification.sample_size:
            return groups
        rng = np.random.default_rng(verification.seed + n)
        picked = rng.choice(len(groups), size=verification.sample_size, replace=False)
        logger.info("Sampling %d of %d groups on %d points", len(picked), len(groups), n)
        return [groups[i] for i in sorted(int(i) for i in picked)]

    def digraph(self, group: NGGroup) -> UnionDigraph:
        if group.key not in self._digraphs:
            self._digraphs[group.key] = build_digraph(group)
        return self._digraphs[group.key]

    def profile(self, group: NGGroup) -> DegreeProfile:
        return degree_profile(self.digraph(group))

    def census(self, group: NGGroup) -> GroupCensus:
        return group_census(group)

    def random_digraphs(self) -> List[Digraph]:
        if self._random is None:
            self._random = list(self._family(self.config.verification.seed, acyclic=False))
        return self._random

    def random_acyclic_digraphs(self) -> List[Digraph]:
        if self._acyclic is None:
            self._acyclic = list(self._family(self.config.verification.seed + 1, acyclic=True))
        return self._acyclic

    def _family(self, seed: int, acyclic: bool) -> Iterable[Digraph]:
        verification = self.config.verification
        return digraph_family(
            verification.random_digraph_count,
            verification.densities,
            verification.random_min_vertices,
            verification.random_max_vertices,
            seed,
            acyclic=acyclic,
        )

    def style(self, n: int) -> str:
        return resolve_style(self.config.output.style, n)

    def describe(self, subject: Any) -> str:
        if isinstance(subject, NGGroup):
            return format_set(subject.elements, self.style(subject.arity))
        if isinstance(subject, Digraph):
            style = self.style(subject.n)
            arcs = ", ".join(
                f"{format_point(i, style)}->{format_point(j, style)}"
                + (f" x{count}" if count > 1 else "")
                for i, j, count in subject.arcs()
            )
            return f"digraph on {subject.n} vertices [{arcs}]"
        return str(subject)

    def points(self, points: Iterable[int], n: int) -> List[str]:
        style = self.style(n)
        return [format_point(p, style) for p in sorted(points)]


class ContextCheck(PropositionCheck):
    """Check bound to a sweep context; sweeps every NG-group by default."""

    def __init__(self, context: SweepContext) -> None:
        self.context = context

    def instances(self, n: int) -> Iterable[Any]:
        return self.context.groups(n)

    def violation(
        self, subject: Any, scope: str, condition: str, **observed: Any
    ) -> Counterexample:
        return Counterexample(
            scope=scope,
            instance=self.context.describe(subject),
            condition=condition,
            observed=observed,
            subject=subject,
        )


@dataclass
class CheckFactory:
    """Registry-backed factory for proposition checks."""

    registry: Dict[PropositionId, Type[ContextCheck]]

    def create(self, proposition: Any, context: SweepContext) -> ContextCheck:
        try:
            check_cls = self.registry[PropositionId(proposition)]
        except (KeyError, ValueError) as exc:
            raise ValueError(f"Unknown proposition: {proposition}") from exc
        return check_cls(context)
