"""Exact minimum palette sizes by exhaustive backtracking.

This module is the ground truth the constructive solvers are checked
against, so it shares no search code with them.  Edges are assigned in an
order that completes vertices early (BFS from vertex 0), and a branch dies
as soon as any completed vertex matches an adjacent completed vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded, EdgelessGraph
from .graphs import Edge, Graph, bfs_order

DEFAULT_NODE_CAP = 10 ** 9


@dataclass
class ExactResult:
    """Outcome of an exact search.

    value is the smallest feasible palette size, or None if every size up
    to kmax is infeasible.  witness is a coloring achieving value (edge map
    for the edge version; (vertex map, edge map) for the total version).
    nodes counts color assignments tried across the whole run.
    """
    value: int | None
    kmax: int
    nodes: int
    witness: dict | tuple[dict, dict] | None = field(default=None, repr=False)

    @property
    def feasible(self) -> bool:
        return self.value is not None


def _edge_plan(g: Graph) -> tuple[list[Edge], list[list[int]]]:
    """Edges ordered to finish vertices early, plus per-edge completions."""
    pos = {v: i for i, v in enumerate(bfs_order(g))}
    edges = sorted(g.edges, key=lambda e: (max(pos[e[0]], pos[e[1]]),
                                           min(pos[e[0]], pos[e[1]])))
    remaining = list(g.degrees())
    completes: list[list[int]] = []
    for u, v in edges:
        done = []
        remaining[u] -= 1
        remaining[v] -= 1
        if remaining[u] == 0:
            done.append(u)
        if remaining[v] == 0:
            done.append(v)
        completes.append(done)
    return edges, completes


class _Search:
    """Depth-first assignment over a fixed item order with sum pruning.

    Items are ("v", vertex) or ("e", edge index); the edge version simply
    has no vertex items.  Each trial adds its color to the endpoint sums,
    marks vertices whose incident set just completed, and rejects the
    branch if a completed vertex ties an adjacent completed vertex.
    """

    def __init__(self, g: Graph, include_vertices: bool, node_cap: int):
        self.g = g
        self.edges, self.completes = _edge_plan(g)
        self.items: list[tuple[str, int]] = []
        if include_vertices:
            self.items += [("v", v) for v in bfs_order(g)]
        self.items += [("e", i) for i in range(len(self.edges))]
        self.node_cap = node_cap
        self.nodes = 0

    def run(self, k: int) -> tuple[dict[int, int], dict[Edge, int]] | None:
        g = self.g
        self.sums = [0] * g.n
        self.done = [False] * g.n
        self.vcol: dict[int, int] = {}
        self.ecol = [0] * len(self.edges)
        if self._assign(0, k):
            return (dict(self.vcol),
                    {self.edges[i]: self.ecol[i] for i in range(len(self.edges))})
        return None

    def _assign(self, i: int, k: int) -> bool:
        if i == len(self.items):
            return True
        kind, x = self.items[i]
        sums, done, g = self.sums, self.done, self.g
        if kind == "v":
            for c in range(1, k + 1):
                self.nodes += 1
                if self.nodes > self.node_cap:
                    raise BudgetExceeded(f"node cap {self.node_cap} hit")
                sums[x] += c
                self.vcol[x] = c
                completed = g.degree(x) == 0
                if completed:
                    done[x] = True  # no neighbors, nothing to conflict with
                if self._assign(i + 1, k):
                    return True
                if completed:
                    done[x] = False
                sums[x] -= c
            del self.vcol[x]
            return False
        u, v = self.edges[x]
        for c in range(1, k + 1):
            self.nodes += 1
            if self.nodes > self.node_cap:
                raise BudgetExceeded(f"node cap {self.node_cap} hit")
            sums[u] += c
            sums[v] += c
            self.ecol[x] = c
            ok = True
            marked = []
            for w in self.completes[x]:
                done[w] = True
                marked.append(w)
                for nb in g.neighbors(w):
                    if done[nb] and sums[nb] == sums[w]:
                        ok = False
                        break
                if not ok:
                    break
            if ok and self._assign(i + 1, k):
                return True
            for w in marked:
                done[w] = False
            sums[u] -= c
            sums[v] -= c
        self.ecol[x] = 0
        return False


def exact_gndi(g: Graph, kmax: int = 4,
               node_cap: int = DEFAULT_NODE_CAP) -> ExactResult:
    """Smallest k admitting an edge k-coloring with distinct adjacent sums."""
    if g.edge_count == 0:
        raise EdgelessGraph("sum distinguishing needs at least one edge")
    search = _Search(g, include_vertices=False, node_cap=node_cap)
    for k in range(1, kmax + 1):
        witness = search.run(k)
        if witness is not None:
            return ExactResult(value=k, kmax=kmax, nodes=search.nodes,
                               witness=witness[1])
    return ExactResult(value=None, kmax=kmax, nodes=search.nodes)


def exact_tgndi(g: Graph, kmax: int = 2,
                node_cap: int = DEFAULT_NODE_CAP) -> ExactResult:
    """Smallest k admitting a total k-coloring with distinct adjacent
    vertex-plus-incident-edge sums."""
    search = _Search(g, include_vertices=True, node_cap=node_cap)
    for k in range(1, kmax + 1):
        witness = search.run(k)
        if witness is not None:
            return ExactResult(value=k, kmax=kmax, nodes=search.nodes,
                               witness=witness)
    return ExactResult(value=None, kmax=kmax, nodes=search.nodes)
