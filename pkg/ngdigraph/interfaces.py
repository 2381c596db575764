"""Interface definitions for proposition checks, exporters, and catalog stores."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, ClassVar, Dict, Iterable, List, Optional, Sequence, TextIO, Tuple

from .models import Counterexample, NGGroup, PropositionId, VerificationReport


class PropositionCheck(ABC):
    """A predicate swept over NG-groups or generated digraphs."""

    proposition: ClassVar[PropositionId]
    statement: ClassVar[str]

    def applies_to(self, n: int) -> bool:
        """Whether the statement says anything about arity ``n``."""
        return True

    @abstractmethod
    def instances(self, n: int) -> Iterable[Any]:
        """Yield the subjects examined at arity ``n`` in canonical order."""

    def extra_scopes(self) -> List[Tuple[str, Iterable[Any]]]:
        """Named subject families swept once, independent of the arity range."""
        return []

    @abstractmethod
    def check(self, subject: Any, scope: str) -> Optional[Counterexample]:
        """Return a counterexample when ``subject`` violates the predicate."""

    def notes(self) -> Dict[str, str]:
        return {}


class RecordExporter(ABC):
    """Renders command results to a text stream."""

    @abstractmethod
    def write_groups(self, groups: Sequence[NGGroup], stream: TextIO) -> int:
        """Write one entry per group; return the number written."""

    @abstractmethod
    def write_reports(self, reports: Sequence[VerificationReport], stream: TextIO) -> None:
        """Write verification reports."""


class CatalogStore(ABC):
    """Persists complete enumeration catalogs."""

    @abstractmethod
    def write(self, records: Sequence[Any]) -> None:
        """Replace the stored catalog with ``records``."""

    @abstractmethod
    def load(self) -> List[Any]:
        """Return every stored record in file order."""
