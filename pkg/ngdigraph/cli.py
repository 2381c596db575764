"""Command-line entry point: enumerate, inspect, verify and export."""

from __future__ import annotations

import argparse
import contextlib
import dataclasses
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO

from .analysis import connectivity_verdict, eulerian_class, is_symmetric
from .catalog import JsonLinesCatalogStore, build_record, record_to_group
from .config import DISPLAY_STYLES, LOOP_POLICIES, OUTPUT_FORMATS, AppConfig, load_config
from .digraph import build_digraph, degree_profile, size_pair
from .errors import (
    ConfigError,
    DomainError,
    InvariantViolation,
    NGDigraphError,
    ResourceLimitError,
)
from .exporters import build_exporter, write_dot, write_inspection_csv
from .groups import build_group, enumerate_ng_groups, group_census, is_group, orbit
from .models import NGGroup, PropositionId, Transformation
from .transformations import (
    fixed_points,
    format_point,
    format_points,
    format_set,
    format_transformation,
    parse_transformation_set,
    rank,
    resolve_style,
)
from .verifier import VerificationPipeline, summarize

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass
class RunConfig:
    """Options of a single command invocation, merged over the file config."""

    command: str
    n: Optional[int] = None
    n_range: List[int] = field(default_factory=list)
    order: Optional[int] = None
    include_trivial: bool = False
    loop_policy: str = "both"
    output_format: str = "text"
    style: str = "auto"
    seed: int = 1736
    arity_cap: int = 8
    closure_limit: int = 10_000
    output_path: Optional[Path] = None

    def __post_init__(self) -> None:
        if self.arity_cap < 1 or self.closure_limit < 1:
            raise ConfigError("Caps must be positive")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"Unknown output format: {self.output_format}")
        if self.style not in DISPLAY_STYLES:
            raise ConfigError(f"Unknown display style: {self.style}")
        if self.loop_policy not in LOOP_POLICIES:
            raise ConfigError(f"Unknown loop policy: {self.loop_policy}")
        if self.n is not None and self.n < 1:
            raise ConfigError("--n must be positive")


def parse_n_range(text: str) -> List[int]:
    """Accept ``4``, ``3..5`` or ``3,5``."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
            values = list(range(low, high + 1))
        else:
            values = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid arity range: {text!r}") from exc
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"arity range must be nonempty and positive: {text!r}")
    return values


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="Optional JSON config file overriding defaults")
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Verbosity for logging output (written to stderr)",
    )
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Output format")
    common.add_argument("--style", choices=DISPLAY_STYLES, help="Point labels: letters or 1-based numbers")
    common.add_argument("--out", type=Path, help="Write output to this path instead of stdout")
    common.add_argument("--workers", type=int, help="Thread count for enumeration and sweeps")
    return common


def _selection_options(parser: argparse.ArgumentParser, n_required: bool) -> None:
    parser.add_argument("--n", type=int, required=n_required, help="Number of points")
    parser.add_argument("--order", type=int, help="Only groups of this order")
    parser.add_argument("--include-trivial", action="store_true", help="Also list order-1 groups")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="ngdigraph",
        description="Enumerate groups of non-permutation maps and check claims about their digraphs",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    enumerate_cmd = commands.add_parser("enumerate", parents=[common], help="List NG-groups on n points")
    _selection_options(enumerate_cmd, n_required=True)

    inspect_cmd = commands.add_parser("inspect", parents=[common], help="Classify and describe one set")
    target = inspect_cmd.add_mutually_exclusive_group(required=True)
    target.add_argument("--group", help='Element tuples, e.g. "{(a,a,c),(c,c,a)}"')
    target.add_argument("--id", dest="group_id", help="Catalog group id (needs --catalog)")
    inspect_cmd.add_argument("--catalog", type=Path, help="Catalog file written by export")

    verify_cmd = commands.add_parser("verify", parents=[common], help="Sweep propositions")
    verify_cmd.add_argument("--n", type=parse_n_range, default=[3, 4], help="Arity or range, e.g. 3..4")
    selector = verify_cmd.add_mutually_exclusive_group(required=True)
    selector.add_argument("--prop", action="append", help="Proposition id (repeatable)")
    selector.add_argument("--all", action="store_true", help="Run every proposition")
    verify_cmd.add_argument("--strict", action="store_true", help="Fail on any divergence")
    verify_cmd.add_argument("--loop-policy", choices=LOOP_POLICIES, help="Loop handling for bipartiteness")
    verify_cmd.add_argument("--seed", type=int, help="Seed for random digraph families and samples")
    verify_cmd.add_argument(
        "--all-counterexamples", action="store_true", help="Do not cap counterexample lists"
    )

    export_cmd = commands.add_parser("export", parents=[common], help="Write a catalog or digraphs")
    _selection_options(export_cmd, n_required=False)
    export_cmd.add_argument("--group", help="Export this set instead of an enumeration")
    return parser


def build_run_config(args: argparse.Namespace, app: AppConfig) -> RunConfig:
    default_format = "structured" if args.command == "export" else app.output.format
    return RunConfig(
        command=args.command,
        n=args.n if isinstance(getattr(args, "n", None), int) else None,
        n_range=args.n if isinstance(getattr(args, "n", None), list) else [],
        order=getattr(args, "order", None),
        include_trivial=getattr(args, "include_trivial", False) or app.enumeration.include_trivial,
        loop_policy=getattr(args, "loop_policy", None) or app.verification.loop_policy,
        output_format=args.format or default_format,
        style=args.style or app.output.style,
        seed=app.verification.seed if getattr(args, "seed", None) is None else args.seed,
        arity_cap=app.enumeration.arity_cap,
        closure_limit=app.enumeration.closure_limit,
        output_path=args.out or (Path(app.output.path) if app.output.path else None),
    )


def merge_app_config(app: AppConfig, run: RunConfig, args: argparse.Namespace) -> AppConfig:
    enumeration = dataclasses.replace(
        app.enumeration,
        include_trivial=run.include_trivial,
        max_workers=args.workers or app.enumeration.max_workers,
    )
    verification = dataclasses.replace(
        app.verification,
        loop_policy=run.loop_policy,
        seed=run.seed,
        strict=getattr(args, "strict", False) or app.verification.strict,
        full_counterexamples=getattr(args, "all_counterexamples", False)
        or app.verification.full_counterexamples,
    )
    output = dataclasses.replace(
        app.output,
        format=run.output_format,
        style=run.style,
        path=str(run.output_path) if run.output_path else None,
    )
    return AppConfig(enumeration=enumeration, verification=verification, output=output)


@contextlib.contextmanager
def open_output(path: Optional[Path]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        yield handle


def cmd_enumerate(run: RunConfig, app: AppConfig) -> int:
    assert run.n is not None
    groups = enumerate_ng_groups(
        run.n, order_filter=run.order, include_trivial=run.include_trivial, config=app.enumeration
    )
    with open_output(run.output_path) as stream:
        build_exporter(run.output_format, run.style).write_groups(groups, stream)
    return EXIT_OK


def _load_target(args: argparse.Namespace) -> List[Transformation]:
    if args.group_id:
        if not args.catalog:
            raise DomainError("--id needs --catalog")
        record = JsonLinesCatalogStore(args.catalog).find(args.group_id)
        if record is None:
            raise DomainError(f"No catalog record with id {args.group_id}")
        return list(record_to_group(record).elements)
    return parse_transformation_set(args.group)


def inspect_set(elements: Sequence[Transformation], style: str) -> Dict[str, Any]:
    """Classification, census and digraph summary of an arbitrary set of maps."""
    members = sorted(set(elements))
    n = members[0].arity
    style = resolve_style(style, n)
    classification = is_group(members)
    details: Dict[str, Any] = {
        "elements": format_set(members, style),
        "classification": classification.describe(),
    }
    unit = classification.identity_elem
    if classification.is_group and unit is not None and rank(unit) == n:
        details["ng_set"] = "not an NG set: permutation"
    elif classification.is_group:
        group = build_group(members)
        census = group_census(group)
        details["order"] = group.order
        details["rank"] = group.rank
        details["identity"] = format_transformation(group.identity_elem, style)
        details["ng_fix"] = format_points(census.ng_fix, style)
        details["orbits"] = {
            format_point(point, style): len(orbit(group, point)) for point in census.ng_fix
        }
        details["moved_pair_count"] = census.moved_pair_count
        details["fixed_point_free_count"] = census.fixed_point_free_count
    details["fixed_counts"] = {
        format_transformation(f, style): len(fixed_points(f)) for f in members
    }

    d = build_digraph(members)
    profile = degree_profile(d)
    verdict = connectivity_verdict(d)
    details["size_pair"] = list(size_pair(d))
    details["adjacency"] = d.arc_counts.tolist()
    details["degrees"] = {
        "out": list(profile.out_degrees),
        "in": list(profile.in_degrees),
        "total": list(profile.degrees),
        "delta_min": profile.delta_min,
        "delta_max": profile.delta_max,
        "fix_degree": profile.fix_degree,
    }
    details["connectivity"] = {
        "weakly_connected": verdict.weakly_connected,
        "quasi_strongly_connected": verdict.quasi_strongly_connected,
        "strongly_connected": verdict.strongly_connected,
        "roots": format_points(verdict.roots, style),
        "witness": format_points(verdict.witness, style) if verdict.witness is not None else None,
    }
    details["eulerian_class"] = eulerian_class(d).value
    details["symmetric"] = is_symmetric(d)
    return details


def _write_inspection(details: Dict[str, Any], stream: TextIO) -> None:
    for key, value in details.items():
        if key == "adjacency":
            stream.write("adjacency:\n")
            for row in value:
                stream.write("  (" + ",".join(str(v) for v in row) + ")\n")
        elif isinstance(value, dict):
            stream.write(f"{key}: " + ", ".join(f"{k}={v}" for k, v in value.items()) + "\n")
        else:
            stream.write(f"{key}: {value}\n")


def cmd_inspect(run: RunConfig, args: argparse.Namespace) -> int:
    elements = _load_target(args)
    with open_output(run.output_path) as stream:
        if run.output_format == "dot":
            n = elements[0].arity
            write_dot(build_digraph(elements), format_set(elements, resolve_style(run.style, n)), stream, run.style)
        elif run.output_format == "csv":
            classification = is_group(elements)
            if classification.is_group and rank(classification.identity_elem) < elements[0].arity:
                build_exporter("csv").write_groups([build_group(elements)], stream)
            else:
                write_inspection_csv(inspect_set(elements, run.style), stream)
        elif run.output_format == "structured":
            stream.write(json.dumps(inspect_set(elements, run.style), sort_keys=True) + "\n")
        else:
            _write_inspection(inspect_set(elements, run.style), stream)
    return EXIT_OK


def cmd_verify(run: RunConfig, app: AppConfig, args: argparse.Namespace) -> int:
    propositions = list(PropositionId) if args.all else [PropositionId(p) for p in args.prop]
    pipeline = VerificationPipeline(app)
    reports = [pipeline.verify(proposition, run.n_range) for proposition in propositions]
    summary = summarize(reports)
    with open_output(run.output_path) as stream:
        build_exporter(run.output_format, run.style).write_reports(reports, stream)
        if run.output_format == "text":
            stream.write(
                f"confirmed: {len(summary.confirmed)}; "
                f"diverging: {[p.value for p in summary.diverging]}; "
                f"unexpected: {[p.value for p in summary.unexpected]}\n"
            )
            expected = [p.value for p in summary.diverging if p not in summary.unexpected]
            if expected:
                stream.write(f"recorded divergences reproduced: {expected}\n")
    return summary.exit_code(strict=app.verification.strict)


def cmd_export(run: RunConfig, app: AppConfig, args: argparse.Namespace) -> int:
    groups: List[NGGroup]
    if args.group:
        groups = [build_group(parse_transformation_set(args.group))]
    elif run.n is not None:
        groups = enumerate_ng_groups(
            run.n, order_filter=run.order, include_trivial=run.include_trivial, config=app.enumeration
        )
    else:
        raise DomainError("export needs --n or --group")

    if run.output_format == "structured" and run.output_path is not None:
        JsonLinesCatalogStore(run.output_path).write([build_record(group) for group in groups])
        return EXIT_OK
    with open_output(run.output_path) as stream:
        count = build_exporter(run.output_format, run.style).write_groups(groups, stream)
    logger.info("Exported %d groups", count)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    try:
        app = load_config(args.config)
        run = build_run_config(args, app)
        app = merge_app_config(app, run, args)
        if run.command == "enumerate":
            return cmd_enumerate(run, app)
        if run.command == "inspect":
            return cmd_inspect(run, args)
        if run.command == "verify":
            return cmd_verify(run, app, args)
        return cmd_export(run, app, args)
    except InvariantViolation:
        raise
    except ResourceLimitError as exc:
        logger.error("%s", exc)
        return EXIT_RESOURCE
    except FileNotFoundError as exc:
        logger.error("Cannot read input: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        logger.error("Cannot write output: %s", exc)
        return EXIT_RESOURCE
    except (NGDigraphError, ValueError) as exc:
        logger.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
