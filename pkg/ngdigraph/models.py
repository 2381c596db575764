"""Domain models used throughout the toolkit.

Points are 0-based integers internally; letter and 1-based renderings live in
``transformations``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Tuple

from .errors import DomainError


@dataclass(frozen=True, order=True)
class Transformation:
    """A self-map of ``{0, ..., n-1}`` given by its image table.

    Ordering compares image tables lexicographically, which is the canonical
    order used by every enumeration and report.
    """

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise DomainError("A transformation needs at least one point")
        arity = len(images)
        for position, value in enumerate(images):
            if not isinstance(value, int) or not 0 <= value < arity:
                raise DomainError(
                    f"Image {value!r} at position {position} is outside [0, {arity})"
                )

    @property
    def arity(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __len__(self) -> int:
        return len(self.images)


@dataclass(frozen=True)
class PointSet:
    """A subset of the points of an ``arity``-point set."""

    arity: int
    members: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        if self.arity < 1:
            raise DomainError("PointSet arity must be positive")
        stray = [m for m in members if not 0 <= m < self.arity]
        if stray:
            raise DomainError(f"Points {sorted(stray)} are outside [0, {self.arity})")

    def __contains__(self, point: object) -> bool:
        return point in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def complement(self) -> "PointSet":
        return PointSet(self.arity, frozenset(range(self.arity)) - self.members)

    def to_list(self) -> List[int]:
        return sorted(self.members)


@dataclass(frozen=True)
class KernelPartition:
    """Partition of the domain into preimage classes."""

    arity: int
    blocks: FrozenSet[FrozenSet[int]]

    def __post_init__(self) -> None:
        blocks = frozenset(frozenset(block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set = set()
        for block in blocks:
            if not block:
                raise DomainError("Kernel blocks must be nonempty")
            if seen & block:
                raise DomainError("Kernel blocks must be pairwise disjoint")
            seen |= block
        if seen != set(range(self.arity)):
            raise DomainError("Kernel blocks must cover every point")

    def sorted_blocks(self) -> List[List[int]]:
        return sorted(sorted(block) for block in self.blocks)


@dataclass(frozen=True)
class NGGroup:
    """A group of non-permutation transformations under composition.

    ``elements`` is kept in canonical (lexicographic) order; that tuple is the
    group's identity for deduplication and reporting. Full group axioms are
    checked by ``groups.build_group``; construction here only enforces the
    cheap structural invariants.
    """

    arity: int
    elements: Tuple[Transformation, ...]
    identity_elem: Transformation
    rank: int

    def __post_init__(self) -> None:
        elements = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise DomainError("An NG-group has at least one element")
        if any(f.arity != self.arity for f in elements):
            raise DomainError("All group elements must share the group's arity")
        if self.identity_elem not in elements:
            raise DomainError("The identity element must belong to the group")
        e = self.identity_elem.images
        if any(e[e[x]] != e[x] for x in range(self.arity)):
            raise DomainError("The identity element must be idempotent")
        if self.rank >= self.arity:
            raise DomainError("An NG-group identity cannot be a permutation")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(f.images for f in self.elements)

    def __iter__(self) -> Iterator[Transformation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements


class PropositionId(str, Enum):
    """Checked statements; two distinct results share the number 3-6."""

    P3_1 = "P3_1"
    P3_2 = "P3_2"
    P3_3 = "P3_3"
    P3_4 = "P3_4"
    P3_5 = "P3_5"
    P3_6_EULER = "P3_6_EULER"
    P3_6_ROOT = "P3_6_ROOT"
    P4_1 = "P4_1"
    P4_3 = "P4_3"
    P4_5 = "P4_5"
    P4_6a = "P4_6a"
    P4_6b = "P4_6b"
    P4_7 = "P4_7"
    P4_9 = "P4_9"
    P4_11 = "P4_11"
    P4_12 = "P4_12"
    MOVED_UNREACHABLE = "MOVED_UNREACHABLE"
    NO_ISOLATED_VERTEX = "NO_ISOLATED_VERTEX"
    ORDER_SPECTRUM = "ORDER_SPECTRUM"


class Verdict(str, Enum):
    HOLDS_ON_ALL = "holds-on-all"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"


class ClaimStatus(str, Enum):
    CONFIRMED = "confirmed"
    DIVERGES = "diverges"


@dataclass
class Counterexample:
    scope: str
    instance: str
    condition: str
    observed: Dict[str, Any] = field(default_factory=dict)
    subject: Any = field(default=None, repr=False, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scope": self.scope,
            "instance": self.instance,
            "condition": self.condition,
            "observed": self.observed,
        }


@dataclass
class ScopeResult:
    """Outcome of one proposition over one arity (or one generated family)."""

    scope: str
    arity: Optional[int]
    instances: int
    failures: int
    expected: ClaimStatus

    @property
    def verdict(self) -> Verdict:
        if self.instances == 0:
            return Verdict.NOT_APPLICABLE
        return Verdict.FAILS if self.failures else Verdict.HOLDS_ON_ALL

    @property
    def status(self) -> Optional[ClaimStatus]:
        if self.verdict is Verdict.NOT_APPLICABLE:
            return None
        return ClaimStatus.DIVERGES if self.failures else ClaimStatus.CONFIRMED

    @property
    def unexpected(self) -> bool:
        return self.status is not None and self.status is not self.expected

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scope": self.scope,
            "instances": self.instances,
            "failures": self.failures,
            "verdict": self.verdict.value,
            "status": self.status.value if self.status else None,
            "expected": self.expected.value,
        }


@dataclass
class VerificationReport:
    proposition: PropositionId
    statement: str
    sweep: str
    scopes: List[ScopeResult]
    counterexamples: List[Counterexample]
    failure_count: int
    notes: Dict[str, str] = field(default_factory=dict)
    elapsed: float = field(default=0.0, compare=False)

    @property
    def verdict(self) -> Verdict:
        verdicts = {scope.verdict for scope in self.scopes}
        if Verdict.FAILS in verdicts:
            return Verdict.FAILS
        if Verdict.HOLDS_ON_ALL in verdicts:
            return Verdict.HOLDS_ON_ALL
        return Verdict.NOT_APPLICABLE

    @property
    def expectation(self) -> Optional[ClaimStatus]:
        """Whether the computed truth confirms the stated claim."""
        if self.verdict is Verdict.NOT_APPLICABLE:
            return None
        return ClaimStatus.DIVERGES if self.verdict is Verdict.FAILS else ClaimStatus.CONFIRMED

    @property
    def unexpected_scopes(self) -> List[ScopeResult]:
        return [scope for scope in self.scopes if scope.unexpected]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "proposition": self.proposition.value,
            "statement": self.statement,
            "sweep": self.sweep,
            "verdict": self.verdict.value,
            "expectation": self.expectation.value if self.expectation else None,
            "unexpected": [scope.scope for scope in self.unexpected_scopes],
            "scopes": [scope.to_dict() for scope in self.scopes],
            "failure_count": self.failure_count,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "notes": self.notes,
        }
