"""Simple undirected graphs on vertices 0..n-1, plus cubic generators.

Edges are canonical pairs (u, v) with u < v.  Graph instances are immutable
after construction and hashable, so they can key caches and dedup sets.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator

from .errors import GenerationExhausted, OddN

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical edge: endpoints ordered ascending."""
    if u == v:
        raise ValueError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """An immutable simple graph."""

    __slots__ = ("n", "edges", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = set()
        for u, v in edges:
            e = edge(u, v)
            if not (0 <= e[0] and e[1] < n):
                raise ValueError(f"edge {e} out of range for n={n}")
            canon.add(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_hash", hash((n, self.edges)))
        # handshake: every edge contributes exactly two endpoint slots
        assert sum(len(a) for a in self._adj) == 2 * len(self.edges)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return v in self._adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def is_cubic(g: Graph) -> bool:
    return g.n > 0 and all(d == 3 for d in g.degrees())


def is_connected(g: Graph) -> bool:
    """BFS reachability from vertex 0; the empty graph counts as connected."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = [0]
    count = 1
    while queue:
        u = queue.pop()
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def bfs_order(g: Graph, start: int = 0) -> list[int]:
    """Vertices in BFS discovery order, restarting at the lowest unseen id."""
    order: list[int] = []
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            order.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


RETRY_BUDGET = 10_000


def random_cubic(n: int, seed: int) -> Graph:
    """Uniformish random simple cubic graph via the configuration model.

    Three stubs per vertex are paired by a seeded shuffle; pairings with
    loops or parallel edges are rejected and redrawn.  Deterministic for a
    given (n, seed).
    """
    if n % 2 != 0:
        raise OddN(f"no cubic graph on an odd vertex count ({n})")
    if n < 4:
        raise ValueError("cubic graphs need at least 4 vertices")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(3)]
    for _ in range(RETRY_BUDGET):
        rng.shuffle(stubs)
        seen: set[Edge] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            e = (u, v) if u < v else (v, u)
            if e in seen:
                ok = False
                break
            seen.add(e)
        if ok:
            return Graph(n, seen)
    raise GenerationExhausted(
        f"no simple cubic pairing for n={n} seed={seed} in {RETRY_BUDGET} tries"
    )


def connected_components(g: Graph) -> list[list[int]]:
    comps: list[list[int]] = []
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = [root]
        while queue:
            u = queue.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def iter_edges_bfs(g: Graph) -> Iterator[Edge]:
    """Edges ordered so each vertex's incident set completes as early as
    possible: sort by the later BFS position of the two endpoints."""
    pos = {v: i for i, v in enumerate(bfs_order(g))}
    yield from sorted(g.edges, key=lambda e: (max(pos[e[0]], pos[e[1]]),
                                              min(pos[e[0]], pos[e[1]])))
