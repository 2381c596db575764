"""Which group orders occur among NG-groups of a given arity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Tuple

from ..groups import is_group, order_tally
from ..models import Counterexample, PropositionId, Transformation
from ..transformations import format_set
from .base import ContextCheck

CLAIMED_ORDERS: Dict[int, Tuple[int, ...]] = {4: (2, 4, 6)}

# Four maps on four points offered as a group of order four.
ORDER_FOUR_CANDIDATE: Tuple[Transformation, ...] = (
    Transformation((0, 0, 3, 3)),
    Transformation((3, 3, 0, 0)),
    Transformation((0, 3, 0, 3)),
    Transformation((3, 0, 3, 0)),
)


@dataclass(frozen=True)
class OrderSpectrum:
    arity: int
    tally: Dict[int, int]

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(sorted(self.tally))

    def __str__(self) -> str:
        return f"NG-group orders on {self.arity} points: {list(self.orders)}"


class OrderSpectrumCheck(ContextCheck):
    proposition = PropositionId.ORDER_SPECTRUM
    statement = "NG-groups on four points have orders exactly 2, 4 and 6."

    def applies_to(self, n: int) -> bool:
        return n in CLAIMED_ORDERS

    def instances(self, n: int) -> Iterable[Any]:
        if not self.applies_to(n):
            return []
        return [OrderSpectrum(n, order_tally(self.context.groups(n)))]

    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        claimed = CLAIMED_ORDERS[subject.arity]
        if subject.orders == claimed:
            return None
        observed: Dict[str, Any] = {
            "orders": list(subject.orders),
            "claimed": list(claimed),
            "tally": {str(order): count for order, count in subject.tally.items()},
        }
        if subject.arity == 4:
            observed["order_four_candidate"] = {
                "elements": format_set(ORDER_FOUR_CANDIDATE),
                "classification": is_group(ORDER_FOUR_CANDIDATE).describe(),
            }
        return self.violation(subject, scope, f"orders == {list(claimed)}", **observed)
