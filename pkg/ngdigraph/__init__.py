"""Groups of non-permutation transformations and their union digraphs."""

from .config import DEFAULT_CONFIG, AppConfig, load_config
from .errors import (
    ConfigError,
    DomainError,
    InvariantViolation,
    NGDigraphError,
    ParseError,
    ResourceLimitError,
)
from .models import NGGroup, PropositionId, Transformation

__all__ = [
    "AppConfig",
    "ConfigError",
    "DEFAULT_CONFIG",
    "DomainError",
    "InvariantViolation",
    "NGDigraphError",
    "NGGroup",
    "ParseError",
    "PropositionId",
    "ResourceLimitError",
    "Transformation",
    "load_config",
]
