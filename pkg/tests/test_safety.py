"""Node classification, safe pairs, uniqueness, and maximal safe walks."""
import random

import pytest

from eulersafe import (
    ContractError,
    Graph,
    SafePairChecker,
    canonical_rotation,
    classify_nodes,
    has_unique_eulerian_circuit,
    is_eulerian,
    is_safe_pair,
    is_valid_walk,
    maximal_safe_walks,
    normalize,
)
from eulersafe.oracles import brute_force_safe_walks, enumerate_eulerian_circuits


def walk_multiset(report):
    """Comparable form: a full circuit may start anywhere, cut walks may not."""
    if report.unique_circuit:
        return sorted(canonical_rotation(w) for w in report.walks)
    return sorted(report.walks)


class TestClassifyNodes:
    def test_figure_eight(self, figure_eight):
        classes = classify_nodes(figure_eight)
        v = classes["v"]
        assert (v.degree, v.is_cut, v.in_a) == (2, True, True)
        a = classes["a"]
        assert (a.degree, a.is_cut, a.in_a) == (1, False, True)

    def test_three_triangles_center_excluded(self, three_triangles):
        classes = classify_nodes(three_triangles)
        assert classes["v"].degree == 3
        assert classes["v"].is_cut
        assert not classes["v"].in_a
        assert all(c.in_a for label, c in classes.items() if label != "v")

    def test_bidirected_triangle_all_excluded(self, bidirected_triangle):
        classes = classify_nodes(bidirected_triangle)
        for c in classes.values():
            assert (c.degree, c.is_cut, c.in_a) == (2, False, False)

    def test_rejects_multigraph(self):
        with pytest.raises(ContractError, match="normalized"):
            classify_nodes(Graph([("a", "b"), ("a", "b"), ("b", "a"), ("b", "a")]))

    def test_rejects_unbalanced(self):
        with pytest.raises(ContractError, match="not Eulerian"):
            classify_nodes(Graph([("a", "b"), ("b", "c")]))

    def test_rejects_disconnected(self):
        g = Graph(
            [("a", "b"), ("b", "c"), ("c", "a"), ("x", "y"), ("y", "z"), ("z", "x")]
        )
        with pytest.raises(ContractError, match="not connected"):
            classify_nodes(g)


class TestSafePair:
    def test_degree_one(self, triangle):
        evidence = is_safe_pair(triangle, 0, 1)
        assert evidence.safe
        assert evidence.reason == "degree-one"

    def test_cut_split(self, figure_eight):
        evidence = is_safe_pair(figure_eight, 2, 3)
        assert evidence.safe
        assert evidence.reason == "cut-split"
        assert evidence.component_u != evidence.component_w

    def test_same_side_of_cut(self, figure_eight):
        evidence = is_safe_pair(figure_eight, 2, 0)
        assert not evidence.safe
        assert evidence.reason == "not-in-any-circuit"
        assert evidence.component_u == evidence.component_w

    def test_degree_too_high(self, three_triangles):
        evidence = is_safe_pair(three_triangles, 2, 3)
        assert not evidence.safe
        assert evidence.reason == "degree-too-high"

    def test_degree_two_non_cut(self, bidirected_triangle):
        evidence = is_safe_pair(bidirected_triangle, 0, 2)
        assert not evidence.safe
        assert evidence.reason == "not-forced"

    def test_edges_missing(self, triangle):
        evidence = is_safe_pair(triangle, 0, 9)
        assert not evidence.safe
        assert evidence.reason == "edges-missing"

    def test_contract_violations(self, triangle):
        with pytest.raises(ContractError, match="distinct"):
            is_safe_pair(triangle, 1, 1)
        with pytest.raises(ContractError, match="not consecutive"):
            is_safe_pair(triangle, 0, 2)

    def test_checker_batches_queries(self, figure_eight):
        checker = SafePairChecker(figure_eight)
        assert checker.check(2, 3).safe
        assert checker.check(5, 0).safe
        assert not checker.check(5, 3).safe
        # The split for 'v' is computed once and reused.
        assert list(checker._splits) == [figure_eight.index["v"]]

    def test_matches_circuit_enumeration(self, corpus_4):
        # Safe iff the pair occurs (consecutively, circularly) in every circuit.
        for g in corpus_4[::5]:
            circuits = enumerate_eulerian_circuits(g).circuits
            checker = SafePairChecker(g)
            m = g.num_edges
            for e1 in range(m):
                for e2 in range(m):
                    if e1 == e2 or g.heads[e1] != g.tails[e2]:
                        continue
                    expected = all(
                        any(
                            c.edges[i] == e1 and c.edges[(i + 1) % m] == e2
                            for i in range(m)
                        )
                        for c in circuits
                    )
                    assert checker.check(e1, e2).safe == expected, (
                        list(g.edge_pairs()),
                        e1,
                        e2,
                    )


class TestUniqueness:
    def test_examples(self, triangle, figure_eight, bidirected_triangle, three_triangles):
        assert has_unique_eulerian_circuit(triangle)
        assert has_unique_eulerian_circuit(figure_eight)
        assert not has_unique_eulerian_circuit(bidirected_triangle)
        assert not has_unique_eulerian_circuit(three_triangles)

    def test_parallel_pair_never_unique(self):
        assert not has_unique_eulerian_circuit(
            Graph([("a", "b"), ("a", "b"), ("b", "a"), ("b", "a")])
        )

    def test_self_loops(self):
        assert has_unique_eulerian_circuit(Graph([("a", "a")]))
        assert has_unique_eulerian_circuit(Graph([("a", "a"), ("a", "a")]))
        assert has_unique_eulerian_circuit(
            Graph([("a", "a"), ("a", "b"), ("b", "a")])
        )
        # Loop at a degree-3 node rules uniqueness out.
        assert not has_unique_eulerian_circuit(
            Graph(
                [("a", "a"), ("a", "b"), ("b", "a"), ("a", "c"), ("c", "a")]
            )
        )

    def test_rejects_non_eulerian(self):
        with pytest.raises(ContractError, match="not Eulerian"):
            has_unique_eulerian_circuit(Graph([("a", "b")]))

    def test_matches_enumeration_on_corpus(self, corpus_4):
        for g in corpus_4:
            count = enumerate_eulerian_circuits(g, cap=2).count
            assert has_unique_eulerian_circuit(g) == (count == 1), list(
                g.edge_pairs()
            )

    def test_matches_enumeration_on_multigraphs(self):
        rng = random.Random(42)
        pool = "abc"
        checked = 0
        while checked < 200:
            base = [
                (rng.choice(pool), rng.choice(pool))
                for _ in range(rng.randint(1, 3))
            ]
            edges = base + [(h, t) for t, h in base if t != h]
            g = Graph(edges)
            if not is_eulerian(g):
                continue
            checked += 1
            ng, _ = normalize(g)
            count = enumerate_eulerian_circuits(ng, cap=2).count
            assert has_unique_eulerian_circuit(g) == (count == 1), edges


class TestMaximalSafeWalks:
    def test_figure_eight_whole_circuit(self, figure_eight):
        report = maximal_safe_walks(figure_eight)
        assert report.unique_circuit
        assert report.walks == ((0, 1, 2, 3, 4, 5),)
        assert report.total_edge_length == 6

    def test_three_triangles_cut_at_center(self, three_triangles):
        report = maximal_safe_walks(three_triangles)
        assert not report.unique_circuit
        assert sorted(report.walks) == [(0, 1, 2), (3, 4, 5), (6, 7, 8)]
        assert report.total_edge_length == 9

    def test_bidirected_triangle_single_edges(self, bidirected_triangle):
        report = maximal_safe_walks(bidirected_triangle)
        assert sorted(report.walks) == [(e,) for e in range(6)]
        assert report.total_edge_length == 6

    def test_walks_partition_edges(self, corpus_4):
        for g in corpus_4[::3]:
            report = maximal_safe_walks(g)
            covered = sorted(e for w in report.walks for e in w)
            assert covered == list(range(g.num_edges))
            assert report.total_edge_length == g.num_edges
            for w in report.walks:
                assert is_valid_walk(g, w)

    def test_matches_brute_force_on_corpus(self, corpus_4):
        for g in corpus_4:
            assert walk_multiset(maximal_safe_walks(g)) == walk_multiset(
                brute_force_safe_walks(g)
            ), list(g.edge_pairs())

    def test_matches_brute_force_on_random_sample(self, random_sample_500):
        for g in random_sample_500[:120]:
            assert walk_multiset(maximal_safe_walks(g)) == walk_multiset(
                brute_force_safe_walks(g)
            ), list(g.edge_pairs())

    def test_independent_of_circuit_choice(self, random_sample_500):
        rng = random.Random(7)
        for g in random_sample_500[:60]:
            baseline = walk_multiset(maximal_safe_walks(g))
            for _ in range(3):
                assert walk_multiset(maximal_safe_walks(g, rng=rng)) == baseline

    def test_multigraph_projection(self):
        g = Graph([("a", "b"), ("a", "b"), ("b", "a"), ("b", "a")])
        ng, nm = normalize(g)
        report = maximal_safe_walks(ng, norm_map=nm)
        assert sorted(report.walks) == [(0,), (1,), (2,), (3,)]
        assert report.total_edge_length == 4
        assert not report.unique_circuit

    def test_unique_multigraph_projection(self):
        g = Graph([("a", "a"), ("a", "b"), ("b", "a")])
        ng, nm = normalize(g)
        report = maximal_safe_walks(ng, norm_map=nm)
        assert report.unique_circuit
        assert len(report.walks) == 1
        assert sorted(report.walks[0]) == [0, 1, 2]
        assert report.total_edge_length == 3

    def test_rejects_raw_multigraph(self):
        with pytest.raises(ContractError, match="normalized"):
            maximal_safe_walks(Graph([("a", "b"), ("a", "b"), ("b", "a"), ("b", "a")]))
