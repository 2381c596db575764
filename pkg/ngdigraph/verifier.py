"""Proposition sweep orchestration."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, List, Optional, Sequence

from .config import DEFAULT_CONFIG, AppConfig
from .interfaces import PropositionCheck
from .models import (
    ClaimStatus,
    Counterexample,
    PropositionId,
    ScopeResult,
    VerificationReport,
)
from .propositions import SweepContext, build_default_factory
from .transformations import check_arity

logger = logging.getLogger(__name__)


@dataclass
class VerificationSummary:
    confirmed: List[PropositionId] = field(default_factory=list)
    diverging: List[PropositionId] = field(default_factory=list)
    unexpected: List[PropositionId] = field(default_factory=list)
    not_applicable: List[PropositionId] = field(default_factory=list)

    def exit_code(self, strict: bool = False) -> int:
        if self.unexpected:
            return 1
        if strict and self.diverging:
            return 1
        return 0


class VerificationPipeline:
    def __init__(self, config: AppConfig = DEFAULT_CONFIG) -> None:
        self._config = config
        self._context = SweepContext(config)
        self._factory = build_default_factory()

    @property
    def context(self) -> SweepContext:
        return self._context

    def create_check(self, proposition: Any) -> PropositionCheck:
        return self._factory.create(proposition, self._context)

    def verify(self, proposition: Any, n_range: Iterable[int]) -> VerificationReport:
        check = self.create_check(proposition)
        arities = sorted(set(n_range))
        for n in arities:
            check_arity(n, self._config.enumeration.arity_cap)

        logger.info("Verifying %s over n=%s", check.proposition.value, arities)
        started = time.perf_counter()
        counterexamples: List[Counterexample] = []
        scopes: List[ScopeResult] = []
        for n in arities:
            subjects = check.instances(n) if check.applies_to(n) else []
            scopes.append(self._sweep(check, f"n={n}", n, subjects, counterexamples))
        for label, subjects in check.extra_scopes():
            scopes.append(self._sweep(check, label, None, subjects, counterexamples))
        elapsed = time.perf_counter() - started

        failure_count = sum(scope.failures for scope in scopes)
        cap = self._counterexample_cap()
        if cap is not None and failure_count > cap:
            logger.warning(
                "%s: keeping %d of %d counterexamples",
                check.proposition.value,
                cap,
                failure_count,
            )
        report = VerificationReport(
            proposition=check.proposition,
            statement=check.statement,
            sweep="; ".join(f"{scope.scope}: {scope.instances} instances" for scope in scopes),
            scopes=scopes,
            counterexamples=counterexamples,
            failure_count=failure_count,
            notes=check.notes(),
            elapsed=elapsed,
        )
        for scope in report.unexpected_scopes:
            logger.warning(
                "%s %s: computed %s, recorded expectation %s",
                check.proposition.value,
                scope.scope,
                scope.status.value if scope.status else None,
                scope.expected.value,
            )
        logger.info(
            "%s finished: %s, %d failures in %.2fs",
            check.proposition.value,
            report.verdict.value,
            failure_count,
            elapsed,
        )
        return report

    def verify_all(self, n_range: Iterable[int]) -> List[VerificationReport]:
        arities = sorted(set(n_range))
        return [self.verify(proposition, arities) for proposition in PropositionId]

    def _counterexample_cap(self) -> Optional[int]:
        verification = self._config.verification
        return None if verification.full_counterexamples else verification.counterexample_cap

    def _expected(self, proposition: PropositionId, arity: Optional[int]) -> ClaimStatus:
        if arity is not None and self._config.verification.divergence_expected(
            proposition.value, arity
        ):
            return ClaimStatus.DIVERGES
        return ClaimStatus.CONFIRMED

    def _sweep(
        self,
        check: PropositionCheck,
        label: str,
        arity: Optional[int],
        subjects: Iterable[Any],
        counterexamples: List[Counterexample],
    ) -> ScopeResult:
        subjects = list(subjects)
        workers = self._config.enumeration.max_workers
        if workers > 1 and len(subjects) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                outcomes = list(pool.map(lambda subject: check.check(subject, label), subjects))
        else:
            outcomes = [check.check(subject, label) for subject in subjects]

        failures = [outcome for outcome in outcomes if outcome is not None]
        cap = self._counterexample_cap()
        room = len(failures) if cap is None else max(cap - len(counterexamples), 0)
        counterexamples.extend(failures[:room])
        logger.debug("%s %s: %d instances, %d failures", check.proposition.value, label, len(subjects), len(failures))
        return ScopeResult(
            scope=label,
            arity=arity,
            instances=len(subjects),
            failures=len(failures),
            expected=self._expected(check.proposition, arity),
        )


def summarize(reports: Sequence[VerificationReport]) -> VerificationSummary:
    summary = VerificationSummary()
    for report in reports:
        if report.unexpected_scopes:
            summary.unexpected.append(report.proposition)
        if report.expectation is ClaimStatus.DIVERGES:
            summary.diverging.append(report.proposition)
        elif report.expectation is ClaimStatus.CONFIRMED:
            summary.confirmed.append(report.proposition)
        else:
            summary.not_applicable.append(report.proposition)
    return summary
