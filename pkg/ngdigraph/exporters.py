"""Text, structured (JSON lines), CSV and DOT renderings of groups and reports."""

from __future__ import annotations

import csv
import json
import logging
from typing import Any, Dict, Sequence, TextIO, Type

from .catalog import build_record
from .config import OUTPUT_FORMATS
from .digraph import Digraph, build_digraph
from .errors import ConfigError
from .groups import order_tally
from .interfaces import RecordExporter
from .models import NGGroup, VerificationReport
from .transformations import format_point, format_set, resolve_style

logger = logging.getLogger(__name__)

# Fixed CSV layouts. List-valued cells are space separated; elements use ';'.
GROUP_CSV_COLUMNS = [
    "group_id",
    "arity",
    "order",
    "rank",
    "identity",
    "elements",
    "ng_fix",
    "n",
    "m",
    "degrees",
    "delta_min",
    "delta_max",
    "weakly_connected",
    "quasi_strongly_connected",
    "strongly_connected",
    "roots",
    "eulerian_class",
]
REPORT_CSV_COLUMNS = [
    "proposition",
    "scope",
    "instances",
    "failures",
    "verdict",
    "status",
    "expected",
]
INSPECTION_CSV_COLUMNS = [
    "elements",
    "classification",
    "ng_set",
    "n",
    "m",
    "degrees",
    "eulerian_class",
    "symmetric",
]


def _format_observed(observed: Dict[str, Any]) -> str:
    return ", ".join(f"{key}={json.dumps(value, sort_keys=True)}" for key, value in observed.items())


class TextExporter(RecordExporter):
    def __init__(self, style: str = "auto") -> None:
        self._style = style

    def write_groups(self, groups: Sequence[NGGroup], stream: TextIO) -> int:
        for index, group in enumerate(groups, start=1):
            style = resolve_style(self._style, group.arity)
            d = build_digraph(group)
            fixed = ",".join(format_point(v, style) for v in sorted(d.fixed_vertices))
            stream.write(
                f"{index:>4}  order {group.order}  rank {group.rank}  "
                f"{format_set(group.elements, style)}  sum={2 * d.m}  ng_fix={{{fixed}}}\n"
            )
        tally = order_tally(groups)
        stream.write(f"{len(groups)} groups; orders {tally}\n")
        return len(groups)

    def write_reports(self, reports: Sequence[VerificationReport], stream: TextIO) -> None:
        for report in reports:
            expectation = report.expectation.value if report.expectation else "n/a"
            flag = "  UNEXPECTED" if report.unexpected_scopes else ""
            stream.write(
                f"{report.proposition.value:<20} {report.verdict.value:<15} {expectation}{flag}\n"
            )
            stream.write(f"    {report.statement}\n")
            for scope in report.scopes:
                status = scope.status.value if scope.status else "n/a"
                stream.write(
                    f"    {scope.scope}: {scope.instances} instances, {scope.failures} failures, "
                    f"{status} (recorded {scope.expected.value})\n"
                )
            for key, value in report.notes.items():
                stream.write(f"    {key}: {value}\n")
            for example in report.counterexamples:
                stream.write(f"    counterexample [{example.scope}] {example.instance}\n")
                stream.write(f"      violates: {example.condition}\n")
                if example.observed:
                    stream.write(f"      observed: {_format_observed(example.observed)}\n")
            hidden = report.failure_count - len(report.counterexamples)
            if hidden > 0:
                stream.write(f"    ... {hidden} more counterexamples\n")


class StructuredExporter(RecordExporter):
    """One JSON object per line with sorted keys."""

    def write_groups(self, groups: Sequence[NGGroup], stream: TextIO) -> int:
        for group in groups:
            stream.write(build_record(group).to_json() + "\n")
        return len(groups)

    def write_reports(self, reports: Sequence[VerificationReport], stream: TextIO) -> None:
        for report in reports:
            stream.write(json.dumps(report.to_dict(), sort_keys=True) + "\n")


class CsvExporter(RecordExporter):
    def write_groups(self, groups: Sequence[NGGroup], stream: TextIO) -> int:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(GROUP_CSV_COLUMNS)
        for group in groups:
            record = build_record(group)
            writer.writerow(
                [
                    record.group_id,
                    record.arity,
                    record.order,
                    record.rank,
                    record.identity,
                    ";".join(record.elements),
                    " ".join(record.ng_fix),
                    record.size_pair[0],
                    record.size_pair[1],
                    " ".join(str(v) for v in record.degree_profile["total"]),
                    record.degree_profile["delta_min"],
                    record.degree_profile["delta_max"],
                    record.connectivity["weakly_connected"],
                    record.connectivity["quasi_strongly_connected"],
                    record.connectivity["strongly_connected"],
                    " ".join(record.connectivity["roots"]),
                    record.eulerian_class,
                ]
            )
        return len(groups)

    def write_reports(self, reports: Sequence[VerificationReport], stream: TextIO) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(REPORT_CSV_COLUMNS)
        for report in reports:
            for scope in report.scopes:
                writer.writerow(
                    [
                        report.proposition.value,
                        scope.scope,
                        scope.instances,
                        scope.failures,
                        scope.verdict.value,
                        scope.status.value if scope.status else "",
                        scope.expected.value,
                    ]
                )


def write_inspection_csv(details: Dict[str, Any], stream: TextIO) -> None:
    """Single row for a set that is not an NG-group, keyed by its classification."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(INSPECTION_CSV_COLUMNS)
    writer.writerow(
        [
            details["elements"],
            details["classification"],
            details.get("ng_set", ""),
            details["size_pair"][0],
            details["size_pair"][1],
            " ".join(str(v) for v in details["degrees"]["total"]),
            details["eulerian_class"],
            details["symmetric"],
        ]
    )


def _dot_label(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_dot(d: Digraph, name: str, stream: TextIO, style: str = "auto") -> None:
    """One edge statement per adjacent pair, multiplicity as its label."""
    resolved = resolve_style(style, d.n)
    labels = [_dot_label(format_point(v, resolved)) for v in range(d.n)]
    stream.write(f"digraph {_dot_label(name)} {{\n")
    for label in labels:
        stream.write(f"  {label};\n")
    for i, j, count in d.arcs():
        stream.write(f'  {labels[i]} -> {labels[j]} [label="{count}"];\n')
    stream.write("}\n")


class DotExporter(RecordExporter):
    def __init__(self, style: str = "auto") -> None:
        self._style = style

    def write_groups(self, groups: Sequence[NGGroup], stream: TextIO) -> int:
        for group in groups:
            name = format_set(group.elements, resolve_style(self._style, group.arity))
            write_dot(build_digraph(group), name, stream, self._style)
        return len(groups)

    def write_reports(self, reports: Sequence[VerificationReport], stream: TextIO) -> None:
        raise ConfigError("DOT output describes group digraphs, not verification reports")


EXPORTERS: Dict[str, Type[RecordExporter]] = {
    "text": TextExporter,
    "structured": StructuredExporter,
    "csv": CsvExporter,
    "dot": DotExporter,
}


def build_exporter(output_format: str, style: str = "auto") -> RecordExporter:
    try:
        exporter_cls = EXPORTERS[output_format]
    except KeyError as exc:
        raise ConfigError(
            f"Unknown output format: {output_format} (expected one of {list(OUTPUT_FORMATS)})"
        ) from exc
    if exporter_cls in (TextExporter, DotExporter):
        return exporter_cls(style)
    return exporter_cls()