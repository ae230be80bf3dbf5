"""Shared result types for the constructive solvers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graphs import Edge


@dataclass(frozen=True)
class VerificationReport:
    """ok iff no edge joins two vertices with equal sums; conflicts lists
    the offending edges in ascending order."""
    ok: bool
    conflicts: tuple[Edge, ...]


@dataclass
class SolveOutcome:
    """A verified coloring plus how it was reached.

    method is the construction branch that produced the final coloring:
    one of case1..case4, or "repaired" / "fallback" when the ladder had to
    take over.  stats carries counters (conflicts_before_repair,
    repair_steps, fallback_nodes) for reporting.
    """
    coloring: Any
    method: str
    colors_used: tuple[int, ...]
    stats: dict[str, int] = field(default_factory=dict)
