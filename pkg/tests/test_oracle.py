"""Exact-minimum oracle tests.

The K4 and K2 anchor values are re-derived here by flat product
enumeration, so the oracle's backtracking search is checked against a
zero-cleverness second route.
"""

from itertools import product

import pytest

from conftest import corpus, graph_from_edges
from nsdcolor.errors import BudgetExceeded, EdgelessGraph
from nsdcolor.graphs import Graph
from nsdcolor.oracle import ExactResult, exact_gndi, exact_tgndi


def brute_gndi(g: Graph, kmax: int) -> int | None:
    edges = list(g.edges)
    for k in range(1, kmax + 1):
        for colors in product(range(1, k + 1), repeat=len(edges)):
            sums = [0] * g.n
            for (u, v), c in zip(edges, colors):
                sums[u] += c
                sums[v] += c
            if all(sums[u] != sums[v] for u, v in edges):
                return k
    return None


def brute_tgndi(g: Graph, kmax: int) -> int | None:
    edges = list(g.edges)
    for k in range(1, kmax + 1):
        palette = range(1, k + 1)
        for vcols in product(palette, repeat=g.n):
            for ecols in product(palette, repeat=len(edges)):
                sums = list(vcols)
                for (u, v), c in zip(edges, ecols):
                    sums[u] += c
                    sums[v] += c
                if all(sums[u] != sums[v] for u, v in edges):
                    return k
    return None


class TestEdgeAnchors:
    def test_k4_needs_exactly_three(self, k4):
        assert brute_gndi(k4, 4) == 3
        assert exact_gndi(k4).value == 3

    def test_k2_is_infeasible_at_any_k(self, k2):
        assert brute_gndi(k2, 5) is None
        r = exact_gndi(k2, kmax=5)
        assert r.value is None and not r.feasible

    def test_path_needs_one(self):
        p3 = graph_from_edges(3, [(0, 1), (1, 2)])
        assert exact_gndi(p3).value == 1

    def test_cycle_needs_two(self):
        c4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert brute_gndi(c4, 4) == 2
        assert exact_gndi(c4).value == 2

    def test_k33(self, k33):
        assert exact_gndi(k33).value == 2

    def test_edgeless_rejected(self):
        with pytest.raises(EdgelessGraph):
            exact_gndi(Graph(3, ()))


class TestTotalAnchors:
    def test_k2_needs_exactly_two(self, k2):
        assert brute_tgndi(k2, 2) == 2
        assert exact_tgndi(k2).value == 2

    def test_k4_feasible_at_two(self, k4):
        assert brute_tgndi(k4, 2) == 2
        assert exact_tgndi(k4).value == 2

    def test_single_vertex_needs_one(self):
        assert exact_tgndi(Graph(1, ())).value == 1


class TestWitness:
    def test_edge_witness_is_valid_and_within_palette(self, k4):
        r = exact_gndi(k4)
        ecols = r.witness
        assert set(ecols) == set(k4.edges)
        assert all(1 <= c <= r.value for c in ecols.values())
        sums = {v: sum(c for e, c in ecols.items() if v in e)
                for v in range(4)}
        assert all(sums[u] != sums[v] for u, v in k4.edges)

    def test_total_witness_is_valid(self, k33):
        r = exact_tgndi(k33)
        vcols, ecols = r.witness
        sums = dict(vcols)
        for (u, v), c in ecols.items():
            sums[u] += c
            sums[v] += c
        assert all(sums[u] != sums[v] for u, v in k33.edges)
        assert all(1 <= c <= r.value
                   for c in list(vcols.values()) + list(ecols.values()))


class TestMinimalityAndMonotonicity:
    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_value_minus_one_is_infeasible(self, n):
        for g in corpus(n):
            r = exact_gndi(g)
            if r.value is not None and r.value > 1:
                assert exact_gndi(g, kmax=r.value - 1).value is None
            t = exact_tgndi(g)
            if t.value is not None and t.value > 1:
                assert exact_tgndi(g, kmax=t.value - 1).value is None

    def test_witness_survives_palette_growth(self, k4):
        # a witness at k is verbatim a coloring at k+1
        r = exact_gndi(k4)
        bigger = exact_gndi(k4, kmax=r.value + 1)
        assert bigger.value == r.value


class TestBudget:
    def test_tiny_cap_raises(self, petersen):
        with pytest.raises(BudgetExceeded):
            exact_gndi(petersen, node_cap=10)

    def test_result_reports_node_count(self, k4):
        r = exact_gndi(k4)
        assert isinstance(r, ExactResult)
        assert r.nodes > 0 and r.kmax == 4
