"""Best-first local repair of nearly valid colorings.

The search recolors one element at a time, restricted to elements within
distance 2 of a current conflict (changing a sum can only fix or break
vertices that near).  States are ranked by conflict count with FIFO
tie-breaking, so runs are deterministic.  The node budget scales with the
number of initially conflicting regions.
"""

from __future__ import annotations

import heapq
from typing import Callable, Hashable, Iterable

from .errors import RepairExhausted
from .graphs import Edge, Graph

NODE_BUDGET_PER_COMPONENT = 10_000

# A repair item is ("e", edge) or ("v", vertex); plain edge colorings only
# ever see the former.
Item = tuple[str, Hashable]
Assignment = dict[Item, int]


def conflict_components(g: Graph, conflicts: Iterable[Edge]) -> int:
    """Number of connected groups among the conflict edges (shared
    endpoints merge two conflicts into one region)."""
    conflicts = list(conflicts)
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in conflicts:
        parent.setdefault(e, e)
    for i, e in enumerate(conflicts):
        for f in conflicts[i + 1:]:
            if set(e) & set(f):
                ra, rb = find(e), find(f)
                if ra != rb:
                    parent[ra] = rb
    return len({find(e) for e in conflicts})


def _candidate_items(g: Graph, conflicts: tuple[Edge, ...],
                     items: Iterable[Item]) -> list[Item]:
    near: set[int] = set()
    for u, v in conflicts:
        near.add(u)
        near.add(v)
        near.update(g.neighbors(u))
        near.update(g.neighbors(v))
    out = []
    for item in items:
        kind, x = item
        if kind == "e":
            if x[0] in near or x[1] in near:
                out.append(item)
        elif x in near:
            out.append(item)
    return sorted(out)


def repair_assignment(
    g: Graph,
    assignment: Assignment,
    palette: tuple[int, ...],
    conflicts_of: Callable[[Assignment], tuple[Edge, ...]],
    budget: int | None = None,
) -> tuple[Assignment, int]:
    """Search for a conflict-free assignment near the given one.

    conflicts_of must return the conflicting edges of an assignment in
    ascending order.  Returns (fixed assignment, states expanded); raises
    RepairExhausted when the budget or the reachable space runs out.
    """
    start_conflicts = conflicts_of(assignment)
    if not start_conflicts:
        return dict(assignment), 0
    if budget is None:
        budget = NODE_BUDGET_PER_COMPONENT * max(
            1, conflict_components(g, start_conflicts))
    items = sorted(assignment)
    slot = {item: i for i, item in enumerate(items)}
    frozen_start = tuple(assignment[i] for i in items)
    seen = {frozen_start}
    counter = 0
    heap: list[tuple[int, int, tuple[int, ...]]] = [
        (len(start_conflicts), counter, frozen_start)]
    expanded = 0
    while heap:
        nconf, _, frozen = heapq.heappop(heap)
        expanded += 1
        if expanded > budget:
            raise RepairExhausted(f"repair budget {budget} spent")
        current = dict(zip(items, frozen))
        conflicts = conflicts_of(current)
        for item in _candidate_items(g, conflicts, items):
            idx = slot[item]
            old = frozen[idx]
            for color in palette:
                if color == old:
                    continue
                child = frozen[:idx] + (color,) + frozen[idx + 1:]
                if child in seen:
                    continue
                seen.add(child)
                trial = dict(zip(items, child))
                child_conflicts = conflicts_of(trial)
                if not child_conflicts:
                    return trial, expanded
                counter += 1
                heapq.heappush(heap, (len(child_conflicts), counter, child))
    raise RepairExhausted("no conflict-free coloring reachable by local moves")
