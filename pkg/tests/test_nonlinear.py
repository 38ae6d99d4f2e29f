from fractions import Fraction

import numpy as np
import pytest

from graphhodge import (
    Graph,
    apply_p_laplacian,
    cheeger_check,
    cheeger_constant,
    enumerate_cliques,
    hodge_laplacian,
)

from conftest import complete_graph, cycle_graph, random_connected_graph, random_graph


def p_laplacian_oracle(graph: Graph, f: np.ndarray, p: float) -> np.ndarray:
    """Direct per-vertex formula: sum over neighbors of |f(j)-f(i)|^(p-2) (f(i)-f(j))."""
    out = np.zeros(graph.n_vertices)
    for i in range(1, graph.n_vertices + 1):
        acc = 0.0
        for j in graph.neighbors[i]:
            diff = f[j - 1] - f[i - 1]
            if diff != 0:
                acc += abs(diff) ** (p - 2) * (-diff)
        out[i - 1] = acc
    return out


class TestPLaplacian:
    def test_p2_equals_graph_laplacian(self, rng):
        for _ in range(15):
            g = random_graph(rng, int(rng.integers(2, 10)), 0.5)
            cx = enumerate_cliques(g, 3)
            lap = hodge_laplacian(cx, 0).dense()
            f = rng.normal(size=g.n_vertices)
            assert np.allclose(apply_p_laplacian(g, f, 2.0), lap @ f, atol=1e-12)

    def test_path_p3_example(self):
        path = Graph.from_edges(3, [(1, 2), (2, 3)])
        f = np.array([0.0, 1.0, 3.0])
        got = apply_p_laplacian(path, f, 3.0)
        assert np.allclose(got, p_laplacian_oracle(path, f, 3.0))
        assert got == pytest.approx([-1.0, -3.0, 4.0])

    def test_matches_oracle_for_various_p(self, rng):
        for p in (1.5, 2.0, 2.5, 3.0, 4.0):
            g = random_connected_graph(rng, 7)
            f = rng.normal(size=7)
            assert np.allclose(
                apply_p_laplacian(g, f, p), p_laplacian_oracle(g, f, p), atol=1e-10
            )

    def test_oddness(self, rng):
        g = random_connected_graph(rng, 6)
        f = rng.normal(size=6)
        for p in (1.5, 2.0, 3.0):
            assert np.allclose(
                apply_p_laplacian(g, -f, p), -apply_p_laplacian(g, f, p), atol=1e-12
            )

    def test_constant_function(self):
        g = cycle_graph(5)
        f = np.full(5, 2.5)
        assert np.allclose(apply_p_laplacian(g, f, 3.0), 0.0)
        assert np.allclose(apply_p_laplacian(g, f, 1.0, mode="selection"), 0.0)
        intervals = apply_p_laplacian(g, f, 1.0)
        # intervals are symmetric and contain the zero representative
        assert np.allclose(intervals[:, 0], -intervals[:, 1])
        assert np.all(intervals[:, 0] <= 0.0) and np.all(intervals[:, 1] >= 0.0)

    def test_p1_intervals_negate(self, rng):
        g = random_connected_graph(rng, 6)
        f = rng.integers(0, 3, size=6).astype(float)  # forces some flat edges
        a = apply_p_laplacian(g, f, 1.0)
        b = apply_p_laplacian(g, -f, 1.0)
        assert np.allclose(a[:, 0], -b[:, 1])
        assert np.allclose(a[:, 1], -b[:, 0])

    def test_p1_selection_lies_inside_interval(self, rng):
        g = random_connected_graph(rng, 7)
        f = rng.integers(-2, 3, size=7).astype(float)
        intervals = apply_p_laplacian(g, f, 1.0)
        sel = apply_p_laplacian(g, f, 1.0, mode="selection")
        assert np.all(intervals[:, 0] <= sel + 1e-12)
        assert np.all(sel <= intervals[:, 1] + 1e-12)

    def test_p1_interval_width_counts_flat_edges(self):
        path = Graph.from_edges(3, [(1, 2), (2, 3)])
        f = np.array([1.0, 1.0, 5.0])
        intervals = apply_p_laplacian(path, f, 1.0)
        # edge (1,2) is flat: one unit of slack at vertices 1 and 2
        assert intervals[0].tolist() == [-1.0, 1.0]
        assert intervals[1].tolist() == [-2.0, 0.0]
        assert intervals[2].tolist() == [1.0, 1.0]

    def test_p_below_one_rejected(self):
        with pytest.raises(ValueError, match="p must be"):
            apply_p_laplacian(cycle_graph(3), np.zeros(3), 0.5)

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError, match="vertex values"):
            apply_p_laplacian(cycle_graph(3), np.zeros(4), 2.0)


class TestCheegerConstant:
    def test_square(self):
        h, cut = cheeger_constant(cycle_graph(4))
        assert h == Fraction(1, 2)
        assert cut.subset == (1, 2)
        assert cut.boundary_edges == 2
        assert cut.volumes == (4, 4)

    def test_complete_four(self):
        h, cut = cheeger_constant(complete_graph(4))
        assert h == Fraction(2, 3)
        assert len(cut.subset) == 2
        assert cut.boundary_edges == 4

    def test_single_edge(self):
        h, cut = cheeger_constant(Graph.from_edges(2, [(1, 2)]))
        assert h == Fraction(1, 1)
        assert cut.subset == (1,)
        assert cut.volumes == (1, 1)

    def test_exhaustive_matches_direct_enumeration(self, rng):
        from itertools import combinations

        for _ in range(10):
            g = random_connected_graph(rng, int(rng.integers(3, 9)))
            n = g.n_vertices
            best = None
            for size in range(1, n):
                for subset in combinations(range(1, n + 1), size):
                    s = set(subset)
                    boundary = sum(1 for u, v in g.edges if (u in s) != (v in s))
                    vol_s = sum(g.degree(v) for v in subset)
                    vol_c = sum(g.degrees) - vol_s
                    ratio = Fraction(boundary, min(vol_s, vol_c))
                    if best is None or ratio < best:
                        best = ratio
            h, _ = cheeger_constant(g)
            assert h == best

    def test_relabeling_invariance(self, rng):
        g = random_connected_graph(rng, 8)
        perm = list(rng.permutation(np.arange(1, 9)))
        relabeled = Graph.from_edges(8, [(perm[u - 1], perm[v - 1]) for u, v in g.edges])
        assert cheeger_constant(g)[0] == cheeger_constant(relabeled)[0]

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError, match="connected"):
            cheeger_constant(Graph.from_edges(4, [(1, 2), (3, 4)]))

    def test_too_large_rejected(self):
        g = cycle_graph(30)
        with pytest.raises(ValueError, match="capped at 24"):
            cheeger_constant(g)

    def test_complete_graph_closed_form(self):
        # h(K_n) = ceil(n/2) / (n-1)
        for n in range(2, 9):
            h, _ = cheeger_constant(complete_graph(n))
            assert h == Fraction((n + 1) // 2, n - 1)


class TestCheegerInequality:
    def test_square_report(self):
        report = cheeger_check(cycle_graph(4))
        assert float(report.h) == 0.5
        assert report.lambda2_normalized == pytest.approx(1.0, abs=1e-12)
        assert report.normalized_holds
        assert not report.plain_holds  # 0.5 * 2 > 1/2 for the plain Laplacian

    def test_single_edge_boundary_tight(self):
        report = cheeger_check(Graph.from_edges(2, [(1, 2)]))
        assert report.lambda2_normalized == pytest.approx(2.0, abs=1e-12)
        assert report.normalized_holds  # 1/2 * 2 == 1 == h

    def test_complete_graphs(self):
        for n in range(2, 9):
            report = cheeger_check(complete_graph(n))
            assert report.lambda2_normalized == pytest.approx(n / (n - 1), abs=1e-10)
            assert report.normalized_holds

    def test_normalized_inequality_on_random_graphs(self, rng):
        for _ in range(40):
            g = random_connected_graph(rng, int(rng.integers(2, 13)))
            assert cheeger_check(g).normalized_holds
