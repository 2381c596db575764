"""Detection and enumeration of NG-groups.

Every group of transformations lives inside the maximal subgroup (H-class) of
its identity idempotent, so enumeration walks idempotents, builds each H-class
and closes small generator subsets inside it. ``oracle`` keeps the naive
pair-closure search as an independent cross-check.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .config import EnumerationConfig
from .errors import DomainError, ResourceLimitError
from .models import NGGroup, PointSet, Transformation
from .transformations import (
    DEFAULT_ARITY_CAP,
    check_arity,
    compose,
    fixed_points,
    identity,
    is_idempotent,
    rank,
    uniform_arity,
)

logger = logging.getLogger(__name__)

DEFAULT_CLOSURE_LIMIT = 10_000


class SetTag(str, Enum):
    """How a finite set of transformations behaves under composition."""

    GROUP = "group"
    UNION_OF_GROUPS = "union-of-groups"
    OTHER_SEMIGROUP = "other-semigroup"
    NOT_CLOSED = "not-closed"


@dataclass(frozen=True)
class ClosedSetClass:
    tag: SetTag
    idempotent_count: int
    witness: Optional[Tuple[Transformation, Transformation]] = None
    identity_elem: Optional[Transformation] = None

    @property
    def is_group(self) -> bool:
        return self.tag is SetTag.GROUP

    def describe(self) -> str:
        noun = "idempotent" if self.idempotent_count == 1 else "idempotents"
        return f"{self.tag.value}, {self.idempotent_count} {noun}"


@dataclass(frozen=True)
class GroupCensus:
    fixed_counts: Dict[Transformation, int]
    ng_fix: PointSet
    moved_pair_count: int
    fixed_point_free_count: int


def closure(
    seed: Iterable[Transformation], limit: int = DEFAULT_CLOSURE_LIMIT
) -> FrozenSet[Transformation]:
    """Smallest composition-closed superset of ``seed``."""
    generators = sorted(set(seed))
    uniform_arity(generators)
    elements = set(generators)
    if len(elements) > limit:
        raise ResourceLimitError(f"Closure exceeds the limit of {limit} elements")
    frontier = list(generators)
    while frontier:
        discovered: List[Transformation] = []
        for word in frontier:
            for generator in generators:
                product = compose(word, generator)
                if product in elements:
                    continue
                elements.add(product)
                if len(elements) > limit:
                    raise ResourceLimitError(f"Closure exceeds the limit of {limit} elements")
                discovered.append(product)
        frontier = discovered
    return frozenset(elements)


def _lies_in_subgroup(f: Transformation) -> bool:
    # f generates a cyclic group exactly when its powers return to f.
    seen = {f}
    power = compose(f, f)
    while power != f:
        if power in seen:
            return False
        seen.add(power)
        power = compose(power, f)
    return True


def is_group(elements: Iterable[Transformation]) -> ClosedSetClass:
    """Classify a finite set of transformations under composition."""
    members = sorted(set(elements))
    uniform_arity(members)
    member_set = set(members)
    idempotent_elems = [f for f in members if is_idempotent(f)]

    for f in members:
        for g in members:
            if compose(f, g) not in member_set:
                return ClosedSetClass(SetTag.NOT_CLOSED, len(idempotent_elems), witness=(f, g))

    unit = next(
        (
            e
            for e in idempotent_elems
            if all(compose(e, f) == f and compose(f, e) == f for f in members)
        ),
        None,
    )
    if unit is not None and all(
        any(compose(f, g) == unit and compose(g, f) == unit for g in members) for f in members
    ):
        return ClosedSetClass(SetTag.GROUP, len(idempotent_elems), identity_elem=unit)

    stray = next((f for f in members if not _lies_in_subgroup(f)), None)
    if stray is None:
        return ClosedSetClass(SetTag.UNION_OF_GROUPS, len(idempotent_elems))
    return ClosedSetClass(
        SetTag.OTHER_SEMIGROUP, len(idempotent_elems), witness=(stray, compose(stray, stray))
    )


def build_group(elements: Iterable[Transformation]) -> NGGroup:
    """Validate ``elements`` as an NG-group and wrap them."""
    members = sorted(set(elements))
    classification = is_group(members)
    if not classification.is_group:
        raise DomainError(f"Not a group: {classification.describe()}")
    unit = classification.identity_elem
    assert unit is not None
    if rank(unit) == unit.arity:
        raise DomainError("Not an NG-group: the identity is a permutation")
    return NGGroup(unit.arity, tuple(members), unit, rank(unit))


def idempotents(
    n: int, rank_filter: Optional[int] = None, cap: int = DEFAULT_ARITY_CAP
) -> List[Transformation]:
    """All idempotent maps on n points, optionally of a single rank."""
    check_arity(n, cap)
    found: List[Transformation] = []
    for size in range(1, n + 1):
        if rank_filter is not None and size != rank_filter:
            continue
        for fixed in itertools.combinations(range(n), size):
            others = [x for x in range(n) if x not in fixed]
            for targets in itertools.product(fixed, repeat=len(others)):
                images = list(range(n))
                for x, y in zip(others, targets):
                    images[x] = y
                found.append(Transformation(tuple(images)))
    return sorted(found)


def h_class_group(e: Transformation) -> NGGroup:
    """Maximal subgroup with identity ``e``: all maps sharing its kernel and image."""
    if not is_idempotent(e):
        raise DomainError("h_class_group needs an idempotent")
    if e == identity(e.arity):
        raise DomainError("The identity map's H-class is the symmetric group")
    support = sorted(set(e.images))
    elements = []
    for arrangement in itertools.permutations(support):
        relabel = dict(zip(support, arrangement))
        elements.append(Transformation(tuple(relabel[y] for y in e.images)))
    return NGGroup(e.arity, tuple(elements), e, len(support))


def subgroups_of_h_class(
    e: Transformation,
    generator_bound: int = 2,
    closure_limit: int = DEFAULT_CLOSURE_LIMIT,
) -> List[NGGroup]:
    h_class = h_class_group(e)
    found: Dict[Tuple[Transformation, ...], NGGroup] = {}
    for size in range(1, generator_bound + 1):
        for generators in itertools.combinations(h_class.elements, size):
            key = tuple(sorted(closure(generators, closure_limit)))
            if key not in found:
                found[key] = NGGroup(e.arity, key, e, h_class.rank)
    logger.debug("Idempotent %s: %d subgroups", e.images, len(found))
    return list(found.values())


def required_generator_bound(n: int) -> int:
    """Generators needed to reach every subgroup of the H-classes on n points.

    The largest H-class has rank n - 1, and every subgroup of a symmetric group
    on r >= 3 letters is generated by floor(r / 2) elements.
    """
    return max(2, (n - 1) // 2)


def enumerate_ng_groups(
    n: int,
    order_filter: Optional[int] = None,
    include_trivial: bool = False,
    config: Optional[EnumerationConfig] = None,
) -> List[NGGroup]:
    """All groups of non-permutation maps on n points in canonical order."""
    config = config or EnumerationConfig()
    check_arity(n, config.arity_cap)
    required = required_generator_bound(n)
    if config.generator_bound < required:
        logger.warning(
            "generator_bound=%d may miss subgroups on %d points; %d generators are needed",
            config.generator_bound,
            n,
            required,
        )
    seeds = [e for e in idempotents(n, cap=config.arity_cap) if rank(e) < n]
    worker = partial(
        subgroups_of_h_class,
        generator_bound=config.generator_bound,
        closure_limit=config.closure_limit,
    )
    if config.max_workers > 1:
        with ThreadPoolExecutor(max_workers=config.max_workers) as pool:
            batches = list(pool.map(worker, seeds))
    else:
        batches = [worker(e) for e in seeds]

    groups: Dict[Tuple[Tuple[int, ...], ...], NGGroup] = {}
    for batch in batches:
        for group in batch:
            if group.order == 1 and not include_trivial:
                continue
            if order_filter is not None and group.order != order_filter:
                continue
            groups.setdefault(group.key, group)
    result = [groups[key] for key in sorted(groups)]
    logger.info("Enumerated %d NG-groups on %d points", len(result), n)
    return result


def group_census(group: NGGroup) -> GroupCensus:
    counts = {f: len(fixed_points(f)) for f in group}
    union: set = set()
    for f in group:
        union |= fixed_points(f).members
    return GroupCensus(
        fixed_counts=counts,
        ng_fix=PointSet(group.arity, frozenset(union)),
        moved_pair_count=sum(group.arity - c for c in counts.values()),
        fixed_point_free_count=sum(1 for c in counts.values() if c == 0),
    )


def _check_point(group: NGGroup, point: int) -> None:
    if not 0 <= point < group.arity:
        raise DomainError(f"Point {point} is outside [0, {group.arity})")


def orbit(group: NGGroup, point: int) -> PointSet:
    _check_point(group, point)
    return PointSet(group.arity, frozenset(f(point) for f in group))


def stabilizer(group: NGGroup, point: int) -> Tuple[Transformation, ...]:
    _check_point(group, point)
    return tuple(f for f in group if f(point) == point)


def order_tally(groups: Sequence[NGGroup]) -> Dict[int, int]:
    tally: Dict[int, int] = {}
    for group in groups:
        tally[group.order] = tally.get(group.order, 0) + 1
    return dict(sorted(tally.items()))
