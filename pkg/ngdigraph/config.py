"""Configuration models and helpers for enumeration, verification and output."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import json
import os
import re

from typing_extensions import Self

from .errors import ConfigError

OUTPUT_FORMATS = ("text", "structured", "csv", "dot")
DISPLAY_STYLES = ("auto", "letters", "numeric")
LOOP_POLICIES = ("count-as-odd-cycle", "ignore", "both")

# Proposition id -> smallest arity from which the computed verdict is known to
# contradict the claim.
DEFAULT_EXPECTED_DIVERGENCES: Dict[str, int] = {
    "P3_5": 1,
    "P4_3": 5,
    "P4_6a": 1,
    "P4_6b": 4,
    "ORDER_SPECTRUM": 4,
}


@dataclass
class EnumerationConfig:
    """Limits and switches for transformation and group enumeration."""

    arity_cap: int = 8
    closure_limit: int = 10_000
    generator_bound: int = 2
    include_trivial: bool = False
    max_workers: int = 1

    def validate(self) -> None:
        for name in ("arity_cap", "closure_limit", "generator_bound", "max_workers"):
            if getattr(self, name) < 1:
                raise ConfigError(f"enumeration.{name} must be positive")


@dataclass
class VerificationConfig:
    """Sweep parameters for the proposition verifier."""

    loop_policy: str = "both"
    counterexample_cap: int = 10
    full_counterexamples: bool = False
    seed: int = 1736
    random_digraph_count: int = 1000
    random_min_vertices: int = 2
    random_max_vertices: int = 8
    densities: List[float] = field(default_factory=lambda: [0.1, 0.3, 0.5])
    sample_from_arity: int = 5
    sample_size: int = 1000
    expected_divergences: Dict[str, int] = field(
        default_factory=lambda: dict(DEFAULT_EXPECTED_DIVERGENCES)
    )
    strict: bool = False

    def validate(self) -> None:
        if self.loop_policy not in LOOP_POLICIES:
            raise ConfigError(f"Unknown loop policy: {self.loop_policy}")
        if self.counterexample_cap < 1:
            raise ConfigError("verification.counterexample_cap must be positive")
        if self.random_digraph_count < 0 or self.sample_size < 1:
            raise ConfigError("verification sample sizes must be positive")
        if not 1 <= self.random_min_vertices <= self.random_max_vertices:
            raise ConfigError("verification random vertex range is empty")
        if not self.densities or any(not 0.0 < d <= 1.0 for d in self.densities):
            raise ConfigError("verification.densities must lie in (0, 1]")

    def divergence_expected(self, proposition: str, arity: int) -> bool:
        start = self.expected_divergences.get(proposition)
        return start is not None and arity >= start


@dataclass
class OutputConfig:
    """Where and how command results are rendered."""

    format: str = "text"
    style: str = "auto"
    path: Optional[str] = None

    def validate(self) -> None:
        if self.format not in OUTPUT_FORMATS:
            raise ConfigError(f"Unknown output format: {self.format}")
        if self.style not in DISPLAY_STYLES:
            raise ConfigError(f"Unknown display style: {self.style}")


@dataclass
class AppConfig:
    """Top-level configuration for the toolkit."""

    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    verification: VerificationConfig = field(default_factory=VerificationConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    def __post_init__(self) -> None:
        self.enumeration.validate()
        self.verification.validate()
        self.output.validate()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> Self:
        try:
            enumeration = EnumerationConfig(**data.get("enumeration", {}))
            verification = VerificationConfig(**data.get("verification", {}))
            output = OutputConfig(**data.get("output", {}))
        except TypeError as exc:
            raise ConfigError(f"Invalid configuration: {exc}") from exc
        return cls(enumeration=enumeration, verification=verification, output=output)

    @classmethod
    def from_json(cls, path: Path) -> Self:
        data = json.loads(path.read_text())
        return cls.from_dict(data)


DEFAULT_CONFIG = AppConfig()


def expand_env_vars(data: Any) -> Any:
    """Recursively expand ${VAR} and $VAR references in config values."""
    if isinstance(data, dict):
        return {key: expand_env_vars(value) for key, value in data.items()}
    if isinstance(data, list):
        return [expand_env_vars(item) for item in data]
    if isinstance(data, str):
        def replacer(match: "re.Match[str]") -> str:
            var_name = match.group(1) or match.group(2)
            return os.environ.get(var_name, match.group(0))

        return re.sub(r"\$\{(\w+)\}|\$(\w+)", replacer, data)
    return data


def load_config(path: Optional[Path]) -> AppConfig:
    if not path:
        return AppConfig()
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    raw_config = json.loads(path.read_text())
    return AppConfig.from_dict(expand_env_vars(raw_config))
