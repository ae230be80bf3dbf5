"""Spanning m-partite subgraphs by local search, and the cubic decomposition.

Moving one vertex into the part where it has the fewest neighbors never
decreases the cross-edge count, so a local optimum leaves every vertex with
at most deg/m neighbors on its own side.  The cross subgraph H therefore
keeps d_H(v) >= ceil((1 - 1/m) * d(v)); for cubic graphs with m=2 that means
d_H is 2 or 3 everywhere and the leftover edges form a matching.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadM, DegreeBoundViolated, NotCubic
from .graphs import Edge, Graph, is_cubic


@dataclass(frozen=True)
class Partition:
    """part[v] is the block index of vertex v; blocks are 0..m-1."""
    part: tuple[int, ...]
    m: int


def cross_edge_count(g: Graph, p: Partition) -> int:
    part = p.part
    return sum(1 for u, v in g.edges if part[u] != part[v])


def max_mpartite_subgraph(g: Graph, m: int, seed: int = 0) -> Partition:
    """Locally optimal m-partition maximizing cross edges.

    First-improvement sweeps in ascending vertex id from a seeded random
    start; every accepted move strictly increases the cut, so the loop
    terminates after at most |E| moves.
    """
    if g.n == 0:
        raise ValueError("cannot partition the empty graph")
    if m < 2 or m > g.n:
        raise BadM(f"m must be in 2..{g.n}, got {m}")
    rng = random.Random(seed)
    part = [rng.randrange(m) for _ in range(g.n)]
    moved = True
    while moved:
        moved = False
        for v in range(g.n):
            counts = [0] * m
            for w in g.neighbors(v):
                counts[part[w]] += 1
            own = counts[part[v]]
            for target in range(m):
                if target != part[v] and counts[target] < own:
                    part[v] = target
                    moved = True
                    break
    return Partition(tuple(part), m)


@dataclass(frozen=True)
class Decomposition:
    """A cubic graph split along a 2-partition.

    vx/vy are the two sides; e_h the cross edges; e_x/e_y the leftover
    matchings inside each side.  a1/b1 count X vertices with cross degree
    2/3, a2/b2 the same for Y.
    """
    vx: tuple[int, ...]
    vy: tuple[int, ...]
    e_x: tuple[Edge, ...]
    e_y: tuple[Edge, ...]
    e_h: tuple[Edge, ...]
    a1: int
    b1: int
    a2: int
    b2: int

    def in_x(self, v: int) -> bool:
        return v in self._x_set

    @property
    def _x_set(self) -> frozenset[int]:
        return frozenset(self.vx)


def decompose(g: Graph, p: Partition) -> Decomposition:
    """Split a cubic graph along a locally optimal 2-partition."""
    if not is_cubic(g):
        raise NotCubic("decomposition is defined for cubic graphs")
    if p.m != 2:
        raise BadM(f"decomposition needs a 2-partition, got m={p.m}")
    part = p.part
    vx = tuple(v for v in range(g.n) if part[v] == 0)
    vy = tuple(v for v in range(g.n) if part[v] == 1)
    e_x, e_y, e_h = [], [], []
    for e in g.edges:
        u, v = e
        if part[u] == part[v]:
            (e_x if part[u] == 0 else e_y).append(e)
        else:
            e_h.append(e)
    h_deg = [0] * g.n
    for u, v in e_h:
        h_deg[u] += 1
        h_deg[v] += 1
    low = [v for v in range(g.n) if h_deg[v] < 2]
    if low:
        raise DegreeBoundViolated(
            f"vertices {low} keep fewer than 2 cross edges; "
            "the partition is not locally optimal")
    a1 = sum(1 for v in vx if h_deg[v] == 2)
    b1 = sum(1 for v in vx if h_deg[v] == 3)
    a2 = sum(1 for v in vy if h_deg[v] == 2)
    b2 = sum(1 for v in vy if h_deg[v] == 3)
    d = Decomposition(vx, vy, tuple(e_x), tuple(e_y), tuple(e_h),
                      a1, b1, a2, b2)
    # counting identities for the leftover-matching structure
    assert a1 % 2 == 0 and a2 % 2 == 0
    assert len(d.e_x) == a1 // 2 and len(d.e_y) == a2 // 2
    assert 2 * a1 + 3 * b1 == len(d.e_h) == 2 * a2 + 3 * b2
    assert len(d.e_x) + len(d.e_y) + len(d.e_h) == 3 * g.n // 2
    return d


@dataclass
class Sides:
    """A Decomposition oriented so constructions can fix which side is X.

    Both coloring modules dispatch on the (a1, b1, a2, b2) profile and then
    want the distinguished side under the name X; oriented() renames the
    sides instead of duplicating each construction in mirror image.
    """
    xs: frozenset[int]
    ys: frozenset[int]
    e_x: tuple[Edge, ...]
    e_y: tuple[Edge, ...]
    e_h: tuple[Edge, ...]
    h_deg: dict[int, int]
    partner: dict[int, int]   # matching partner inside a side, both sides

    def h_edges_at(self, v: int, coloring: dict[Edge, int],
                   color: int | None = None) -> list[Edge]:
        out = []
        for e in self.e_h:
            if v in e and (color is None or coloring[e] == color):
                out.append(e)
        return out

    def y_end(self, e: Edge) -> int:
        return e[0] if e[0] in self.ys else e[1]

    def x_end(self, e: Edge) -> int:
        return e[0] if e[0] in self.xs else e[1]


def oriented(d: Decomposition, swap: bool) -> Sides:
    if swap:
        vx, vy, e_x, e_y = d.vy, d.vx, d.e_y, d.e_x
    else:
        vx, vy, e_x, e_y = d.vx, d.vy, d.e_x, d.e_y
    h_deg: dict[int, int] = {v: 0 for v in vx + vy}
    for u, v in d.e_h:
        h_deg[u] += 1
        h_deg[v] += 1
    partner: dict[int, int] = {}
    for u, v in e_x + e_y:
        partner[u] = v
        partner[v] = u
    return Sides(frozenset(vx), frozenset(vy), e_x, e_y, d.e_h, h_deg, partner)
