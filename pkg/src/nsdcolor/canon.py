"""Canonical forms, isomorphism, and exhaustive cubic enumeration.

No external canonical-labeling library: graphs here are small (n <= 12 for
enumeration, n < 63 elsewhere), so an exact search is affordable.

The canonical code of a labeled graph is the tuple of its adjacency columns
(column j = the bits joining vertex j to vertices 0..j-1, packed into an
int), maximized lexicographically over all relabelings.  Two bit orders are
supported inside a column:

  low-first:  bit (0, j) is the most significant
  high-first: bit (j-1, j) is the most significant

Both give valid canonical forms; the enumerator can run under either, which
provides an end-to-end cross-check that the search does not depend on a
particular vertex ordering.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph

ORDERINGS = ("low-first", "high-first")


def _column_code(adj_mask: int, order: list[int], p: int, low_first: bool) -> int:
    """Pack the adjacency bits of a candidate against order[0..p-1]."""
    code = 0
    if low_first:
        for i in range(p):
            code = (code << 1) | (adj_mask >> order[i] & 1)
    else:
        for i in range(p):
            code |= (adj_mask >> order[i] & 1) << i
    return code


def canonical_form(g: Graph, ordering: str = "low-first") -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Maximal code over all relabelings, plus one labeling achieving it.

    Returns (code, order) where order[p] is the original vertex placed at
    position p.  Runs a breadth-first search over prefix-optimal partial
    labelings; the frontier stays small because only code ties survive.
    """
    if ordering not in ORDERINGS:
        raise ValueError(f"ordering must be one of {ORDERINGS}")
    low_first = ordering == "low-first"
    n = g.n
    if n == 0:
        return (), ()
    masks = [0] * n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    frontier: list[list[int]] = [[v] for v in range(n)]
    code: list[int] = []
    for p in range(1, n):
        best = -1
        keep: list[list[int]] = []
        for order in frontier:
            used = set(order)
            for v in range(n):
                if v in used:
                    continue
                c = _column_code(masks[v], order, p, low_first)
                if c > best:
                    best = c
                    keep = [order + [v]]
                elif c == best:
                    keep.append(order + [v])
        code.append(best)
        frontier = keep
    return tuple(code), tuple(frontier[0])


def canonical_code(g: Graph, ordering: str = "low-first") -> tuple[int, ...]:
    """Certificate: equal for exactly the isomorphic graphs of equal order."""
    return canonical_form(g, ordering)[0]


def canonical_graph(g: Graph, ordering: str = "low-first") -> Graph:
    """The isomorphic copy of g in its canonical labeling."""
    code, order = canonical_form(g, ordering)
    pos = {v: p for p, v in enumerate(order)}
    return Graph(g.n, ((pos[u], pos[v]) for u, v in g.edges))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_code(g) == canonical_code(h)


# --- exhaustive enumeration of connected cubic graphs -----------------------

ENUMERABLE_N = (4, 6, 8, 10, 12)


class _Enumerator:
    """Orderly generation: grow one vertex (= one code column) at a time and
    keep a branch only while its column prefix is the lexicographic maximum
    over relabelings of the placed vertices.  Each connected cubic graph then
    survives in exactly one labeling."""

    def __init__(self, n: int, low_first: bool):
        self.n = n
        self.low_first = low_first
        self.masks = [0] * n
        self.deg = [0] * n
        self.cols: list[int] = []
        self.found: list[Graph] = []

    def run(self) -> list[Graph]:
        self._place(1)
        return self.found

    def _prefix_is_canonical(self, k: int) -> bool:
        """No relabeling of the k placed vertices beats the current columns."""
        masks, cols, low_first = self.masks, self.cols, self.low_first
        order = [0] * k
        used = [False] * k

        def rec(p: int) -> bool:
            # True means an improvement exists: caller must prune.
            if p == k:
                return False
            target = cols[p - 1]
            ties = []
            for v in range(k):
                if used[v]:
                    continue
                c = _column_code(masks[v], order, p, low_first)
                if c > target:
                    return True
                if c == target:
                    ties.append(v)
            for v in ties:
                order[p] = v
                used[v] = True
                if rec(p + 1):
                    return True
                used[v] = False
            return False

        for v0 in range(k):
            order[0] = v0
            used[v0] = True
            if rec(1):
                return False
            used[v0] = False
        return True

    def _saturated_fragment(self, k: int) -> bool:
        """A fully 3-regular component among the placed vertices can never
        reach the vertices still to come, so the completion is disconnected."""
        masks, deg = self.masks, self.deg
        seen = 0
        for root in range(k):
            bit = 1 << root
            if seen & bit:
                continue
            comp = bit
            stack = [root]
            saturated = True
            while stack:
                u = stack.pop()
                if deg[u] < 3:
                    saturated = False
                nbrs = masks[u] & ~comp
                while nbrs:
                    low = nbrs & -nbrs
                    comp |= low
                    stack.append(low.bit_length() - 1)
                    nbrs ^= low
            if saturated:
                return True  # k < n whenever this runs mid-search
            seen |= comp
        return False

    def _place(self, j: int):
        """Choose the backward neighbors of vertex j; recurse or record."""
        n, masks, deg = self.n, self.masks, self.deg
        unplaced_after = n - j - 1
        eligible = [i for i in range(j) if deg[i] < 3]
        min_size = max(0, 3 - unplaced_after)
        cands: list[tuple[int, tuple[int, ...]]] = []
        for size in range(min_size, min(3, len(eligible)) + 1):
            for subset in combinations(eligible, size):
                if self.low_first:
                    code = sum(1 << (j - 1 - i) for i in subset)
                else:
                    code = sum(1 << i for i in subset)
                cands.append((code, subset))
        cands.sort(reverse=True)
        for code, subset in cands:
            # degree feasibility: every deficiency must be coverable by the
            # vertices still to come, each of which absorbs at most 3.
            deficit = 3 - len(subset)
            total_deficit = deficit
            ok = True
            for i in range(j):
                d = 3 - deg[i] - (1 if i in subset else 0)
                if d > unplaced_after:
                    ok = False
                    break
                total_deficit += d
            if not ok or total_deficit > 3 * unplaced_after:
                continue
            jbit = 1 << j
            for i in subset:
                masks[i] |= jbit
                masks[j] |= 1 << i
                deg[i] += 1
            deg[j] = len(subset)
            self.cols.append(code)
            if self._prefix_is_canonical(j + 1):
                if unplaced_after == 0:
                    # feasibility forces 3-regularity here; fragments were
                    # pruned along the way, so the leaf must be connected.
                    g = Graph(n, [(i, jj) for jj in range(n)
                                  for i in range(jj) if masks[jj] >> i & 1])
                    assert all(d == 3 for d in g.degrees())
                    self.found.append(g)
                elif not self._saturated_fragment(j + 1):
                    self._place(j + 1)
            self.cols.pop()
            deg[j] = 0
            masks[j] = 0
            for i in subset:
                masks[i] &= ~jbit
                deg[i] -= 1


def enumerate_cubic(n: int, ordering: str = "low-first") -> list[Graph]:
    """One representative per isomorphism class of connected cubic graphs.

    Representatives come back in their canonical labeling, sorted by code,
    so two runs under different orderings return identical lists.
    """
    if n not in ENUMERABLE_N:
        raise ValueError(f"enumeration supports n in {ENUMERABLE_N}, got {n}")
    if ordering not in ORDERINGS:
        raise ValueError(f"ordering must be one of {ORDERINGS}")
    raw = _Enumerator(n, ordering == "low-first").run()
    reps = [canonical_graph(g) for g in raw]
    keyed = sorted((canonical_code(g), g) for g in reps)
    return [g for _, g in keyed]
