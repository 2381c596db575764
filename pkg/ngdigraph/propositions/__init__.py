"""Proposition checks and their registry."""

from .base import CheckFactory, ContextCheck, SweepContext
from .registry import build_default_factory

__all__ = ["CheckFactory", "ContextCheck", "SweepContext", "build_default_factory"]
