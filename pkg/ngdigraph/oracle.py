"""Brute-force NG-group search used to cross-check ``groups.enumerate_ng_groups``.

Closes every singleton and every unordered pair of non-permutation maps and
keeps the closures that pass ``is_group``. Every subgroup of a symmetric group
on at most four letters is 2-generated, so the search is complete for n <= 5
(H-classes there have rank at most 4).
"""

from __future__ import annotations

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from .groups import DEFAULT_CLOSURE_LIMIT, closure, is_group
from .models import NGGroup, Transformation
from .transformations import (
    DEFAULT_ARITY_CAP,
    enumerate_all,
    is_idempotent,
    is_permutation,
    rank,
)

logger = logging.getLogger(__name__)


def _single_idempotent(elements: Sequence[Transformation]) -> bool:
    # The identity is the only idempotent of a group.
    return sum(1 for f in elements if is_idempotent(f)) == 1


def brute_force_ng_groups(
    n: int,
    include_trivial: bool = False,
    pool: Optional[Sequence[Transformation]] = None,
    cap: int = DEFAULT_ARITY_CAP,
    closure_limit: int = DEFAULT_CLOSURE_LIMIT,
) -> List[NGGroup]:
    """Groups found by closing singletons and pairs drawn from ``pool``.

    ``pool`` defaults to every non-permutation map on n points.
    """
    if pool is None:
        pool = [f for f in enumerate_all(n, cap) if not is_permutation(f)]
    found: Dict[Tuple[Transformation, ...], NGGroup] = {}
    seen: set = set()
    seeds = itertools.chain(
        ((f,) for f in pool), itertools.combinations(pool, 2)
    )
    for seed in seeds:
        key = tuple(sorted(closure(seed, closure_limit)))
        if key in seen:
            continue
        seen.add(key)
        if not _single_idempotent(key):
            continue
        classification = is_group(key)
        if not classification.is_group:
            continue
        unit = classification.identity_elem
        assert unit is not None
        if len(key) == 1 and not include_trivial:
            continue
        found[key] = NGGroup(n, key, unit, rank(unit))
    logger.info("Oracle classified %d distinct closures on %d points", len(seen), n)
    return [found[key] for key in sorted(found)]
