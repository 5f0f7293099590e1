import itertools
import random
import time

import pytest

from lnnroute import AdjacencyGraph, bisect


def cut_weight(graph, left):
    left = set(left)
    return sum(w for u, v, w in graph.edges() if (u in left) != (v in left))


def exhaustive_min_cut(graph, verts):
    verts = list(verts)
    best = None
    for left in itertools.combinations(verts, (len(verts) + 1) // 2):
        cut = cut_weight(graph, left)
        best = cut if best is None else min(best, cut)
    return best


def random_graph(rng, n, m, max_w=4):
    g = AdjacencyGraph(n)
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        g.add_edge(u, v, rng.randint(1, max_w))
    return g


class TestBisect:
    def test_two_vertices(self):
        g = AdjacencyGraph(2, [(0, 1, 7)])
        left, right = bisect(g)
        assert sorted(left + right) == [0, 1]
        assert cut_weight(g, left) == 7

    def test_path_graph_cuts_middle_edge(self):
        g = AdjacencyGraph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)])
        left, right = bisect(g)
        assert sorted(map(sorted, (left, right))) == [[0, 1], [2, 3]]
        assert cut_weight(g, left) == 1 == exhaustive_min_cut(g, range(4))

    def test_star_cut_is_two(self):
        g = AdjacencyGraph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
        left, _ = bisect(g)
        assert cut_weight(g, left) == 2 == exhaustive_min_cut(g, range(4))

    def test_subset_bisection(self):
        g = AdjacencyGraph(6, [(0, 1, 1), (1, 2, 1), (3, 4, 9)])
        left, right = bisect(g, [1, 3, 4])
        assert sorted(left + right) == [1, 3, 4]
        assert len(left) == 2
        assert {3, 4} <= set(left)  # heavy edge stays intact

    def test_needs_two_vertices(self):
        with pytest.raises(ValueError, match="two"):
            bisect(AdjacencyGraph(3), [1])

    def test_balance_invariant(self):
        rng = random.Random(50)
        for _ in range(40):
            n = rng.randint(2, 13)
            g = random_graph(rng, n, rng.randint(0, 2 * n))
            left, right = bisect(g)
            assert len(left) == (n + 1) // 2
            assert len(right) == n // 2
            assert sorted(left + right) == list(range(n))

    def test_matches_exhaustive_on_small_graphs(self):
        rng = random.Random(100)
        for _ in range(60):
            n = rng.randint(2, 11)
            g = random_graph(rng, n, rng.randint(0, 2 * n))
            left, _ = bisect(g)
            assert cut_weight(g, left) == exhaustive_min_cut(g, range(n))

    def test_deterministic_given_seed(self):
        rng = random.Random(51)
        g = random_graph(rng, 30, 90)
        assert bisect(g, seed=3) == bisect(g, seed=3)

    def test_edgeless_graph_splits_lexicographically(self):
        left, right = bisect(AdjacencyGraph(5))
        assert left == [0, 1, 2]
        assert right == [3, 4]

    def test_unweighted_mode_ignores_weights(self):
        # one heavy edge vs many unit edges: weighted mode saves the heavy edge,
        # unweighted mode treats every edge alike
        g = AdjacencyGraph(4, [(0, 1, 10), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)])
        left_w, _ = bisect(g, weighted=True)
        assert {0, 1} in (set(left_w), {0, 1, 2, 3} - set(left_w))

    def test_runtime_scales_gently_with_edges(self):
        # coarse complexity check: doubling edges must not triple the runtime
        def build(m):
            rng = random.Random(5)
            g = AdjacencyGraph(400)
            added = set()
            while len(added) < m:
                u, v = rng.sample(range(400), 2)
                key = (min(u, v), max(u, v))
                if key in added:
                    continue
                added.add(key)
                g.add_edge(u, v, rng.randint(1, 3))
            return g

        def best_of(graph, repeats=3):
            times = []
            for _ in range(repeats):
                start = time.perf_counter()
                bisect(graph, seed=1)
                times.append(time.perf_counter() - start)
            return min(times)

        base = best_of(build(1600))
        doubled = best_of(build(3200))
        assert doubled < 3 * base
