"""Shared fixtures and independent reference helpers.

The isomorphism search and the random-graph builder here are deliberately
written without touching nsdcolor.canon, so tests that cross-check the
canonical machinery have a second, independent route to the same answer.
"""

from __future__ import annotations

import random
from functools import lru_cache

import pytest

from nsdcolor.canon import enumerate_cubic
from nsdcolor.graphs import Edge, Graph, bfs_order, edge


def graph_from_edges(n: int, pairs) -> Graph:
    return Graph(n, tuple(edge(u, v) for u, v in pairs))


@pytest.fixture
def k2() -> Graph:
    return graph_from_edges(2, [(0, 1)])


@pytest.fixture
def k4() -> Graph:
    return graph_from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


@pytest.fixture
def k33() -> Graph:
    return graph_from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])


@pytest.fixture
def prism() -> Graph:
    return graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                (0, 3), (1, 4), (2, 5)])


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return graph_from_edges(10, outer + inner + spokes)


@lru_cache(maxsize=None)
def corpus(n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_cubic(n))


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style random graph, independent of the package's RNG use."""
    rng = random.Random(n * 1_000_003 + round(p * 1000) * 1_009 + seed)
    pairs = [edge(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, tuple(pairs))


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Backtracking vertex-map search; exhaustive, so None is a proof.

    Kept free of canonical forms on purpose: this is the reference route
    for validating them."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    order = bfs_order(g)
    mapping = [-1] * g.n
    used = [False] * h.n

    def consistent(v: int, w: int, placed: int) -> bool:
        for j in range(placed):
            u = order[j]
            if g.has_edge(u, v) != h.has_edge(mapping[u], w):
                return False
        return True

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used[w] or h.degree(w) != g.degree(v):
                continue
            if not consistent(v, w, i):
                continue
            mapping[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return mapping if extend(0) else None


def apply_map(g: Graph, mapping: list[int]) -> set[Edge]:
    return {edge(mapping[u], mapping[v]) for u, v in g.edges}
