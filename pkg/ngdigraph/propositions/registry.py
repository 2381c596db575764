"""Check registry mapping proposition ids to implementations."""

from __future__ import annotations

from typing import Dict, Type

from ..models import PropositionId
from .base import CheckFactory, ContextCheck
from .connectivity import (
    AcyclicSourceSinkCheck,
    BipartiteCheck,
    EulerCriterionCheck,
    MovedUnreachableCheck,
    NoIsolatedVertexCheck,
    RootQuasiStrongCheck,
    StrongConnectivityCheck,
)
from .degree_sums import (
    CaseSumCheck,
    FactorialBoundCheck,
    GroupSumLawCheck,
    HandshakingCheck,
    NGHandshakingCheck,
)
from .fixed_points import (
    FixedPairCircuitCheck,
    FixedPointDifferenceCheck,
    FixedPointFreeCheck,
    OrbitStabilizerCheck,
    SingleFixedPointCheck,
    ThreePointStructureCheck,
)
from .spectrum import OrderSpectrumCheck


def build_default_factory() -> CheckFactory:
    checks = [
        HandshakingCheck,
        NGHandshakingCheck,
        FixedPairCircuitCheck,
        GroupSumLawCheck,
        BipartiteCheck,
        EulerCriterionCheck,
        RootQuasiStrongCheck,
        CaseSumCheck,
        FixedPointDifferenceCheck,
        ThreePointStructureCheck,
        SingleFixedPointCheck,
        FixedPointFreeCheck,
        AcyclicSourceSinkCheck,
        FactorialBoundCheck,
        OrbitStabilizerCheck,
        StrongConnectivityCheck,
        MovedUnreachableCheck,
        NoIsolatedVertexCheck,
        OrderSpectrumCheck,
    ]
    registry: Dict[PropositionId, Type[ContextCheck]] = {
        check.proposition: check for check in checks
    }
    return CheckFactory(registry)
