"""Persistent enumeration catalog: one JSON record per NG-group per line."""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from typing_extensions import Self

from .analysis import connectivity_verdict, eulerian_class
from .digraph import build_digraph, degree_profile, size_pair
from .groups import build_group
from .interfaces import CatalogStore
from .models import NGGroup
from .transformations import STYLE_NUMERIC, format_point, format_transformation, parse_transformation

logger = logging.getLogger(__name__)

GROUP_ID_LENGTH = 16


def group_id(group: NGGroup) -> str:
    """Stable id derived from the sorted element tuples."""
    canonical = json.dumps([list(images) for images in group.key], separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:GROUP_ID_LENGTH]


def _numeric(points: Sequence[int]) -> List[str]:
    return [format_point(p, STYLE_NUMERIC) for p in sorted(points)]


@dataclass
class CatalogRecord:
    arity: int
    group_id: str
    order: int
    rank: int
    elements: List[str]
    identity: str
    ng_fix: List[str]
    degree_profile: Dict[str, Any]
    size_pair: List[int]
    adjacency: List[List[int]]
    connectivity: Dict[str, Any]
    eulerian_class: str

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> Self:
        return cls(**data)


def build_record(group: NGGroup) -> CatalogRecord:
    d = build_digraph(group)
    profile = degree_profile(d)
    verdict = connectivity_verdict(d)
    return CatalogRecord(
        arity=group.arity,
        group_id=group_id(group),
        order=group.order,
        rank=group.rank,
        elements=[format_transformation(f, STYLE_NUMERIC) for f in group.elements],
        identity=format_transformation(group.identity_elem, STYLE_NUMERIC),
        ng_fix=_numeric(d.fixed_vertices),
        degree_profile={
            "out": list(profile.out_degrees),
            "in": list(profile.in_degrees),
            "total": list(profile.degrees),
            "delta_min": profile.delta_min,
            "delta_max": profile.delta_max,
            "fix_degree": profile.fix_degree,
        },
        size_pair=list(size_pair(d)),
        adjacency=d.arc_counts.tolist(),
        connectivity={
            "weakly_connected": verdict.weakly_connected,
            "strongly_connected": verdict.strongly_connected,
            "quasi_strongly_connected": verdict.quasi_strongly_connected,
            "roots": _numeric(verdict.roots),
            "witness": _numeric(verdict.witness) if verdict.witness is not None else None,
        },
        eulerian_class=eulerian_class(d).value,
    )


def record_to_group(record: CatalogRecord) -> NGGroup:
    return build_group(parse_transformation(text) for text in record.elements)


class JsonLinesCatalogStore(CatalogStore):
    """Writes the whole catalog on every run; no incremental updates."""

    def __init__(self, path: Path) -> None:
        self._path = Path(path)

    @property
    def path(self) -> Path:
        return self._path

    def write(self, records: Sequence[CatalogRecord]) -> None:
        self._path.parent.mkdir(parents=True, exist_ok=True)
        with self._path.open("w", encoding="utf-8", newline="\n") as handle:
            for record in records:
                handle.write(record.to_json() + "\n")
        logger.info("Wrote %d catalog records to %s", len(records), self._path)

    def load(self) -> List[CatalogRecord]:
        with self._path.open(encoding="utf-8") as handle:
            return [CatalogRecord.from_dict(json.loads(line)) for line in handle if line.strip()]

    def find(self, wanted: str) -> Optional[CatalogRecord]:
        return next((record for record in self.load() if record.group_id == wanted), None)
