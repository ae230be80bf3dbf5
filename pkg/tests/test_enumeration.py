"""Enumerator and canonical-form tests.

The completeness evidence is layered: exact subset brute force at n = 6,
an independent backtracking isomorphism search for pairwise distinctness
up to n = 8, certificate distinctness at n = 10 and 12, and random-sample
inclusion (every configuration-model draw lands in the enumerated list).
"""

from itertools import combinations

import pytest

from conftest import corpus, find_isomorphism, graph_from_edges
from nsdcolor.canon import (ENUMERABLE_N, ORDERINGS, are_isomorphic,
                            canonical_code, canonical_graph, enumerate_cubic)
from nsdcolor.graphs import Graph, edge, is_connected, is_cubic, random_cubic

EXPECTED_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


class TestCounts:
    @pytest.mark.parametrize("n", sorted(EXPECTED_COUNTS))
    def test_class_counts(self, n):
        assert len(corpus(n)) == EXPECTED_COUNTS[n]

    @pytest.mark.parametrize("n", sorted(EXPECTED_COUNTS))
    def test_both_orderings_agree(self, n):
        runs = [enumerate_cubic(n, ordering=o) for o in ORDERINGS]
        assert runs[0] == runs[1]

    def test_unsupported_n_rejected(self):
        with pytest.raises(ValueError):
            enumerate_cubic(14)
        with pytest.raises(ValueError):
            enumerate_cubic(5)

    def test_enumerable_n_constant(self):
        assert ENUMERABLE_N == (4, 6, 8, 10, 12)


class TestRepresentatives:
    @pytest.mark.parametrize("n", sorted(EXPECTED_COUNTS))
    def test_all_cubic_connected_canonical(self, n):
        for g in corpus(n):
            assert is_cubic(g) and is_connected(g)
            assert canonical_graph(g) == g

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_pairwise_non_isomorphic_by_reference_search(self, n):
        for a, b in combinations(corpus(n), 2):
            assert find_isomorphism(a, b) is None

    @pytest.mark.parametrize("n", [10, 12])
    def test_pairwise_distinct_certificates(self, n):
        codes = [canonical_code(g) for g in corpus(n)]
        assert len(set(codes)) == len(codes)


class TestCompleteness:
    def test_n4_unique_class_is_k4(self, k4):
        (g,) = corpus(4)
        assert find_isomorphism(g, k4) is not None

    def test_n6_exact_by_subset_brute_force(self):
        """All C(15,9) = 5005 nine-edge graphs on six vertices, filtered to
        connected cubic, then deduplicated by the reference search."""
        universe = [edge(u, v) for u in range(6) for v in range(u + 1, 6)]
        classes: list[Graph] = []
        hits = 0
        for subset in combinations(universe, 9):
            g = Graph(6, subset)
            if not (is_cubic(g) and is_connected(g)):
                continue
            hits += 1
            if not any(find_isomorphism(g, rep) is not None for rep in classes):
                classes.append(g)
        assert len(classes) == 2
        # orbit-stabilizer: 6!/|Aut(K33)| + 6!/|Aut(prism)| = 720/72 + 720/12
        assert hits == 10 + 60
        for g in classes:
            assert any(find_isomorphism(g, rep) is not None
                       for rep in corpus(6))

    @pytest.mark.parametrize("n", [8, 10])
    def test_random_samples_are_all_enumerated(self, n):
        reps = {canonical_code(g) for g in corpus(n)}
        seen = set()
        seed = 0
        while len(seen) < 30:
            g = random_cubic(n, seed=seed)
            seed += 1
            if not is_connected(g):
                continue
            code = canonical_code(g)
            assert code in reps
            seen.add((code, seed % 7))


class TestCanonicalForm:
    def test_relabeling_is_invisible(self, petersen):
        perm = [7, 2, 9, 0, 4, 1, 8, 3, 6, 5]
        relabeled = graph_from_edges(
            10, [(perm[u], perm[v]) for u, v in petersen.edges])
        assert canonical_code(relabeled) == canonical_code(petersen)
        assert are_isomorphic(relabeled, petersen)

    def test_distinguishes_k33_from_prism(self, k33, prism):
        assert not are_isomorphic(k33, prism)
        assert canonical_code(k33) != canonical_code(prism)

    def test_agreement_with_reference_search(self):
        pool = list(corpus(6)) + list(corpus(8))
        for a, b in combinations(pool, 2):
            assert are_isomorphic(a, b) == (find_isomorphism(a, b) is not None)

    def test_petersen_is_enumerated(self, petersen):
        assert canonical_code(petersen) in {canonical_code(g)
                                            for g in corpus(10)}
