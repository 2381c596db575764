#!/usr/bin/env python3
"""Tests for proposition sweeps, expectations and counterexamples."""

import json
import sys

import pytest

from ngdigraph.config import AppConfig, VerificationConfig
from ngdigraph.errors import ResourceLimitError
from ngdigraph.models import ClaimStatus, PropositionId, Verdict
from ngdigraph.verifier import VerificationPipeline, summarize

HOLDING_ON_SMALL_ARITIES = [
    PropositionId.P3_1,
    PropositionId.P3_2,
    PropositionId.P3_3,
    PropositionId.P3_4,
    PropositionId.P3_6_EULER,
    PropositionId.P3_6_ROOT,
    PropositionId.P4_1,
    PropositionId.P4_3,
    PropositionId.P4_5,
    PropositionId.P4_7,
    PropositionId.P4_9,
    PropositionId.P4_11,
    PropositionId.P4_12,
    PropositionId.MOVED_UNREACHABLE,
    PropositionId.NO_ISOLATED_VERTEX,
]
DIVERGING_ON_SMALL_ARITIES = [
    PropositionId.P3_5,
    PropositionId.P4_6a,
    PropositionId.P4_6b,
    PropositionId.ORDER_SPECTRUM,
]


@pytest.fixture(scope="module")
def pipeline():
    return VerificationPipeline(AppConfig())


@pytest.fixture(scope="module")
def small_reports(pipeline):
    return {report.proposition: report for report in pipeline.verify_all([3, 4])}


def test_sum_law_on_three_points(pipeline):
    report = pipeline.verify(PropositionId.P3_4, [3])
    assert report.verdict is Verdict.HOLDS_ON_ALL
    assert report.expectation is ClaimStatus.CONFIRMED
    assert report.scopes[0].instances == 6
    assert report.counterexamples == []


def test_verify_all_covers_every_proposition_once(small_reports):
    assert set(small_reports) == set(PropositionId)
    assert len(small_reports) == len(PropositionId)


def test_small_arity_verdicts(small_reports):
    for proposition in HOLDING_ON_SMALL_ARITIES:
        assert small_reports[proposition].verdict is Verdict.HOLDS_ON_ALL, proposition
    for proposition in DIVERGING_ON_SMALL_ARITIES:
        report = small_reports[proposition]
        assert report.verdict is Verdict.FAILS, proposition
        assert report.expectation is ClaimStatus.DIVERGES
        assert report.counterexamples


def test_small_arity_divergences_are_all_recorded(small_reports):
    summary = summarize(list(small_reports.values()))
    assert summary.unexpected == []
    assert set(summary.diverging) == set(DIVERGING_ON_SMALL_ARITIES)
    assert summary.exit_code() == 0
    assert summary.exit_code(strict=True) == 1


def test_sweep_totals_on_three_points(small_reports):
    scope = small_reports[PropositionId.P3_3].scopes[0]
    assert (scope.scope, scope.instances) == ("n=3", 6)


def test_random_families_are_swept(small_reports):
    root = small_reports[PropositionId.P3_6_ROOT]
    random_scope = [s for s in root.scopes if s.scope == "random"]
    assert random_scope and random_scope[0].instances >= 1000
    assert random_scope[0].failures == 0
    acyclic = small_reports[PropositionId.P4_7]
    assert [s.scope for s in acyclic.scopes if s.instances] == ["random-acyclic"]
    assert small_reports[PropositionId.P3_2].scopes[-1].scope == "n=4"


def test_bipartite_divergence_has_triangle_witness(small_reports):
    report = small_reports[PropositionId.P3_5]
    first = report.counterexamples[0]
    assert first.instance == "{(a,a,c),(c,c,a)}"
    assert first.observed["odd_cycle"] == ["a", "b", "c"]
    assert first.observed["bipartite"] == {"count-as-odd-cycle": False, "ignore": False}


def test_single_fixed_point_divergence(small_reports):
    first = small_reports[PropositionId.P4_6a].counterexamples[0]
    assert first.instance == "{(a,a,c),(c,c,a)}"
    assert first.observed["fixed_counts"] == {"(a,a,c)": 2, "(c,c,a)": 0}


def test_fixed_point_free_divergence_starts_on_four_points():
    config = AppConfig(verification=VerificationConfig(full_counterexamples=True))
    report = VerificationPipeline(config).verify(PropositionId.P4_6b, [3, 4])
    by_scope = {scope.scope: scope for scope in report.scopes}
    assert by_scope["n=3"].verdict is Verdict.HOLDS_ON_ALL
    assert by_scope["n=4"].verdict is Verdict.FAILS
    assert report.unexpected_scopes == []
    instances = {example.instance: example for example in report.counterexamples}
    example = instances["{(a,a,c,d),(a,a,d,c)}"]
    assert sorted(example.observed["fixed_counts"].values()) == [1, 3]
    assert len(report.counterexamples) == report.failure_count


def test_order_spectrum_divergence(small_reports):
    report = small_reports[PropositionId.ORDER_SPECTRUM]
    by_scope = {scope.scope: scope for scope in report.scopes}
    assert by_scope["n=3"].verdict is Verdict.NOT_APPLICABLE
    assert by_scope["n=4"].verdict is Verdict.FAILS
    observed = report.counterexamples[0].observed
    assert observed["orders"] == [2, 3, 6]
    assert observed["claimed"] == [2, 4, 6]
    assert observed["order_four_candidate"]["classification"] == "union-of-groups, 2 idempotents"


def test_case_sums_are_reported(small_reports):
    notes = small_reports[PropositionId.P4_1].notes
    assert notes["case sums n=3"] == "order 2: 12"
    assert notes["case sums n=4"] == "order 2: 16; order 3: 24; order 6: 48"


def test_counterexamples_fail_again_in_isolation(pipeline, small_reports):
    for report in small_reports.values():
        check = pipeline.create_check(report.proposition)
        for example in report.counterexamples:
            assert check.check(example.subject, example.scope) is not None


def test_counterexample_cap_keeps_total(small_reports):
    report = small_reports[PropositionId.P3_5]
    assert len(report.counterexamples) == 10
    assert report.failure_count == 6 + 84


def test_reports_are_deterministic(small_reports):
    again = VerificationPipeline(AppConfig()).verify_all([3, 4])
    first = [json.dumps(r.to_dict(), sort_keys=True) for r in small_reports.values()]
    second = [json.dumps(r.to_dict(), sort_keys=True) for r in again]
    assert first == second


def test_fixed_point_difference_fails_on_five_points(pipeline):
    report = pipeline.verify(PropositionId.P4_3, [3, 4, 5])
    by_scope = {scope.scope: scope for scope in report.scopes}
    assert by_scope["n=3"].status is ClaimStatus.CONFIRMED
    assert by_scope["n=4"].status is ClaimStatus.CONFIRMED
    assert by_scope["n=5"].status is ClaimStatus.DIVERGES
    assert report.unexpected_scopes == []
    differences = {example.observed["difference"] for example in report.counterexamples}
    assert 4 in differences
    example = next(e for e in report.counterexamples if e.observed["difference"] == 4)
    assert sorted(example.observed["fixed_counts"].values()) == [0, 4]


@pytest.mark.parametrize(
    "proposition",
    [PropositionId.P3_3, PropositionId.P4_9, PropositionId.P4_12, PropositionId.P3_4],
)
def test_holds_on_five_points(pipeline, proposition):
    report = pipeline.verify(proposition, [5])
    assert report.verdict is Verdict.HOLDS_ON_ALL


def test_sum_law_samples_on_five_points(pipeline):
    report = pipeline.verify(PropositionId.P3_4, [5])
    assert report.scopes[0].instances == 1000
    assert len(pipeline.context.groups(5)) == 1110


def test_unrecorded_divergence_is_unexpected():
    config = AppConfig(verification=VerificationConfig(expected_divergences={}))
    report = VerificationPipeline(config).verify(PropositionId.P3_5, [3])
    assert [scope.scope for scope in report.unexpected_scopes] == ["n=3"]
    assert summarize([report]).exit_code() == 1


def test_loop_policy_selection():
    config = AppConfig(verification=VerificationConfig(loop_policy="ignore"))
    report = VerificationPipeline(config).verify(PropositionId.P3_5, [3])
    assert report.counterexamples[0].observed["bipartite"] == {"ignore": False}


def test_unknown_proposition_and_cap(pipeline):
    with pytest.raises(ValueError):
        pipeline.verify("P9_9", [3])
    with pytest.raises(ResourceLimitError):
        pipeline.verify(PropositionId.P3_4, [9])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
