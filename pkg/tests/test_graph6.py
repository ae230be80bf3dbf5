"""Codec tests.  networkx acts as the independent reference implementation;
it is a test-only dependency."""

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus, gnp, graph_from_edges
from nsdcolor.errors import (InvalidChar, TooLarge, TrailingGarbage,
                             TruncatedBits)
from nsdcolor.graph6 import emit_graph6, parse_graph6
from nsdcolor.graphs import Graph, edge


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    return Graph(h.number_of_nodes(), tuple(edge(u, v) for u, v in h.edges()))


class TestAnchors:
    def test_k4_parses(self, k4):
        assert parse_graph6("C~") == k4

    def test_k4_emits_byte_exact(self, k4):
        # reference implementation agrees that "C~" is K4
        ref = nx.from_graph6_bytes(b"C~")
        assert from_nx(ref) == k4
        assert emit_graph6(k4) == "C~"

    def test_empty_two_vertex_graph(self):
        assert parse_graph6("A?") == Graph(2, ())

    def test_header_is_tolerated(self, k4):
        assert parse_graph6(">>graph6<<C~") == k4

    def test_header_is_never_emitted(self, k4):
        assert not emit_graph6(k4).startswith(">>")

    def test_bytes_and_str_inputs_agree(self, k4):
        assert parse_graph6(b"C~") == parse_graph6("C~")


class TestErrors:
    def test_invalid_char(self):
        with pytest.raises(InvalidChar):
            parse_graph6("C~\x07")
        with pytest.raises(InvalidChar):
            parse_graph6("!!")

    def test_truncated(self):
        with pytest.raises(TruncatedBits):
            parse_graph6("C")          # K4 needs one data byte
        with pytest.raises(TruncatedBits):
            parse_graph6("")

    def test_trailing_garbage(self):
        with pytest.raises(TrailingGarbage):
            parse_graph6("C~~")        # one data byte too many

    def test_nonzero_padding_bits_rejected(self):
        # n=2: one adjacency bit, five padding bits that must be zero.
        # bit pattern 100000 encodes the edge; anything with a nonzero
        # padding bit is garbage.
        good = bytes([63 + 2, 63 + 0b100000])
        assert parse_graph6(good).edge_count == 1
        with pytest.raises(TrailingGarbage):
            parse_graph6(bytes([63 + 2, 63 + 0b100001]))

    def test_long_form_unsupported(self):
        with pytest.raises(TooLarge):
            parse_graph6("~??~" + "?" * 30)

    def test_emit_rejects_large_n(self):
        with pytest.raises(TooLarge):
            emit_graph6(Graph(63, ()))


class TestCorpusRoundTrip:
    @pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
    def test_round_trip_identity(self, n):
        for g in corpus(n):
            assert parse_graph6(emit_graph6(g)) == g


class TestAgainstReference:
    def test_random_graphs_byte_exact_both_directions(self):
        cases = 0
        for n in (1, 2, 3, 5, 9, 17, 30, 45, 62):
            for p in (0.0, 0.15, 0.5, 0.9):
                for seed in range(7):
                    g = gnp(n, p, seed)
                    mine = emit_graph6(g)
                    theirs = nx.to_graph6_bytes(to_nx(g), header=False).strip()
                    assert mine.encode() == theirs
                    assert from_nx(nx.from_graph6_bytes(mine.encode())) == g
                    assert parse_graph6(theirs) == g
                    cases += 1
        assert cases == 252

    @given(st.integers(min_value=1, max_value=40), st.data())
    @settings(max_examples=200, deadline=None)
    def test_round_trip_property(self, n, data):
        universe = [(u, v) for u in range(n) for v in range(u + 1, n)]
        picked = data.draw(st.sets(st.sampled_from(universe))) if universe else set()
        g = graph_from_edges(n, picked)
        assert parse_graph6(emit_graph6(g)) == g
