import numpy as np
import pytest

from graphhodge import (
    Cochain,
    Graph,
    WeightScheme,
    adjoint,
    apply_operator,
    coboundary,
    divergence_matrix,
    enumerate_cliques,
    hodge_laplacian,
    read_matrix,
    write_matrix,
)

from conftest import (
    CURL_A,
    FULL_ISO_A,
    GRAD_A,
    HELMHOLTZIAN_A,
    HELMHOLTZIAN_B,
    LAP_ISO_A,
    LAP_ISO_B,
    LAPLACIAN_A,
    LAPLACIAN_B,
    complete_graph,
    cycle_graph,
    random_graph,
)


def reindexed(golden, matrix_rows_by_letter, cx):
    """Reorder a lettered golden matrix into the complex's lexicographic edge order."""
    pos = golden.edge_positions(cx)
    out = np.zeros_like(matrix_rows_by_letter)
    # both axes indexed by edges
    for a, pa in enumerate(pos):
        for b, pb in enumerate(pos):
            out[pa, pb] = matrix_rows_by_letter[a, b]
    return out


class TestCoboundaryGolden:
    def test_gradient_matches_up_to_row_sign(self):
        cx = enumerate_cliques(LAP_ISO_A.graph, 3)
        mine = coboundary(cx, 0).matrix.toarray()
        pos = LAP_ISO_A.edge_positions(cx)
        for letter, row in enumerate(pos):
            expected = GRAD_A[letter]
            got = mine[row]
            assert np.array_equal(got, expected) or np.array_equal(got, -expected)

    def test_each_gradient_row_has_one_plus_and_one_minus(self, rng):
        g = random_graph(rng, 9, 0.5)
        cx = enumerate_cliques(g, 2)
        mat = coboundary(cx, 0).matrix.toarray()
        for row in mat:
            assert sorted(row[row != 0]) == [-1.0, 1.0]

    def test_curl_row_support(self):
        cx = enumerate_cliques(LAP_ISO_A.graph, 3)
        mine = coboundary(cx, 1).matrix.toarray()
        assert mine.shape == (1, 7)
        pos = LAP_ISO_A.edge_positions(cx)
        support = {pos[4], pos[5], pos[6]}  # letters e, f, g
        assert set(np.flatnonzero(mine[0])) == support
        expected = np.zeros(7)
        for letter, value in zip((4, 5, 6), CURL_A[0, 4:]):
            expected[pos[letter]] = value
        assert np.array_equal(mine[0], expected) or np.array_equal(mine[0], -expected)

    def test_no_triangles_gives_empty_curl(self, c4_complex):
        op = coboundary(c4_complex, 1)
        assert op.matrix.shape == (0, 4)

    def test_degree_out_of_range(self, c4_complex):
        with pytest.raises(ValueError):
            coboundary(c4_complex, -1)
        with pytest.raises(ValueError):
            coboundary(enumerate_cliques(complete_graph(4), 2), 1)


class TestComposition:
    def test_coboundary_squares_to_zero(self, rng):
        for _ in range(30):
            n = int(rng.integers(2, 11))
            g = random_graph(rng, n, float(rng.uniform(0.3, 0.9)))
            cx = enumerate_cliques(g, n + 1)
            for k in range(0, cx.max_order - 2):
                product = (coboundary(cx, k + 1).matrix @ coboundary(cx, k).matrix).toarray()
                assert not np.any(product)


class TestAdjoint:
    def test_unit_weights_is_transpose(self):
        cx = enumerate_cliques(LAP_ISO_A.graph, 3)
        op = coboundary(cx, 0)
        assert np.array_equal(adjoint(op).toarray(), op.matrix.toarray().T)

    def test_divergence_is_negative_adjoint(self, rng):
        g = random_graph(rng, 7, 0.6)
        cx = enumerate_cliques(g, 3)
        w = WeightScheme.from_table(
            {c: float(rng.uniform(0.5, 3.0)) for order in (1, 2) for c in cx.cliques(order)}
        )
        assert np.allclose(
            divergence_matrix(cx, w).toarray(), -adjoint(coboundary(cx, 0), w).toarray()
        )

    def test_gradient_adjoint_formula(self, rng):
        # independent elementwise evaluation of grad* X(i) = -sum_j (w_ij / w_i) X(i,j)
        g = random_graph(rng, 6, 0.7)
        cx = enumerate_cliques(g, 3)
        vweights = {(v,): float(rng.uniform(0.5, 2.0)) for v in range(1, 7)}
        eweights = {e: float(rng.uniform(0.5, 2.0)) for e in cx.cliques(2)}
        w = WeightScheme.from_table({**vweights, **eweights})
        x = Cochain(1, cx, rng.normal(size=cx.n_cliques(2)))
        got = adjoint(coboundary(cx, 0), w).toarray() @ x.values
        for i in range(1, g.n_vertices + 1):
            expected = -sum(
                w.weight(tuple(sorted((i, j)))) / w.weight((i,)) * x.eval((i, j))
                for j in g.neighbors[i]
            )
            assert got[i - 1] == pytest.approx(expected, abs=1e-12)

    def test_curl_adjoint_formula(self, rng):
        # independent elementwise evaluation of curl* Phi(i,j) = sum_k (w_ijk / w_ij) Phi(i,j,k)
        g = complete_graph(5)
        cx = enumerate_cliques(g, 3)
        eweights = {e: float(rng.uniform(0.5, 2.0)) for e in cx.cliques(2)}
        tweights = {t: float(rng.uniform(0.5, 2.0)) for t in cx.cliques(3)}
        w = WeightScheme.from_table({**eweights, **tweights})
        phi = Cochain(2, cx, rng.normal(size=cx.n_cliques(3)))
        got = adjoint(coboundary(cx, 1), w).toarray() @ phi.values
        for idx, (i, j) in enumerate(cx.cliques(2)):
            expected = sum(
                w.weight(tuple(sorted((i, j, k)))) / w.weight((i, j)) * phi.eval((i, j, k))
                for k in range(1, 6)
                if k not in (i, j)
            )
            assert got[idx] == pytest.approx(expected, abs=1e-12)

    def test_vertex_weight_two_halves_entries(self, c3_complex):
        w = WeightScheme.from_table({(v,): 2.0 for v in (1, 2, 3)})
        op = coboundary(c3_complex, 0)
        assert np.allclose(adjoint(op, w).toarray(), op.matrix.toarray().T / 2.0)

    def test_divergence_free_constant_cycle_flow(self, c3_complex):
        x = Cochain.from_dict(c3_complex, 1, {(1, 2): 2.0, (2, 3): 2.0, (3, 1): 2.0})
        netflow = divergence_matrix(c3_complex).toarray() @ x.values
        assert np.allclose(netflow, 0.0)


class TestHodgeLaplacian:
    def test_degree0_golden_exact(self):
        for golden, expected in ((LAP_ISO_A, LAPLACIAN_A), (LAP_ISO_B, LAPLACIAN_B)):
            cx = enumerate_cliques(golden.graph, 3)
            got = hodge_laplacian(cx, 0).dense()
            assert np.array_equal(got, expected)

    def test_degree1_golden_up_to_edge_orientation(self):
        for golden, expected in ((LAP_ISO_A, HELMHOLTZIAN_A), (LAP_ISO_B, HELMHOLTZIAN_B)):
            cx = enumerate_cliques(golden.graph, 3)
            got = hodge_laplacian(cx, 1).dense()
            signs = golden.edge_signs
            conjugated = reindexed(golden, expected * np.outer(signs, signs), cx)
            assert np.array_equal(got, conjugated)
            assert np.array_equal(np.sort(np.diag(got)), np.sort(np.diag(expected)))

    def test_degree2_single_triangle(self):
        cx = enumerate_cliques(FULL_ISO_A.graph, 4)
        assert np.array_equal(hodge_laplacian(cx, 2).dense(), [[3.0]])

    def test_unit_weight_degree0_is_degree_minus_adjacency(self, rng):
        g = random_graph(rng, 8, 0.5)
        cx = enumerate_cliques(g, 3)
        got = hodge_laplacian(cx, 0).dense()
        expected = np.diag(g.degrees).astype(float)
        for u, v in g.edges:
            expected[u - 1, v - 1] = -1.0
            expected[v - 1, u - 1] = -1.0
        assert np.array_equal(got, expected)

    def test_symmetric_psd_for_random_weights(self, rng):
        for _ in range(10):
            g = random_graph(rng, 7, 0.6)
            cx = enumerate_cliques(g, 4)
            entries = {}
            for order in range(1, 5):
                entries.update({c: float(rng.uniform(0.2, 3.0)) for c in cx.cliques(order)})
            w = WeightScheme.from_table(entries)
            for k in range(0, cx.max_order - 1):
                lap = hodge_laplacian(cx, k, w).dense()
                assert np.array_equal(lap, lap.T)
                if lap.size:
                    eig = np.linalg.eigvalsh(lap)
                    assert eig.min() >= -1e-10 * max(eig.max(), 1.0)

    def test_edge_laplacian_differs_from_helmholtzian_on_triangle(self, c3_complex):
        down = coboundary(c3_complex, 0).matrix.toarray()
        edge_laplacian = down @ down.T
        helmholtzian = hodge_laplacian(c3_complex, 1).dense()
        assert not np.array_equal(edge_laplacian, helmholtzian)

    def test_unknown_up_level_is_error(self):
        cx = enumerate_cliques(complete_graph(4), 2)
        with pytest.raises(ValueError, match="not enumerated"):
            hodge_laplacian(cx, 1)

    def test_degree_out_of_range(self, c4_complex):
        with pytest.raises(ValueError):
            hodge_laplacian(c4_complex, 3)


class TestApply:
    def test_curl_of_constant_triangle_flow(self, c3_complex):
        x = Cochain.from_dict(c3_complex, 1, {(1, 2): 2.0, (2, 3): 2.0, (3, 1): 2.0})
        curl = apply_operator(coboundary(c3_complex, 1), x)
        assert curl.degree == 2
        assert list(curl.values) == [6.0]

    def test_curl_on_square_is_zero_object(self, c4_complex):
        x = Cochain.from_dict(c4_complex, 1, {(1, 2): 2.0, (2, 3): 2.0, (3, 4): 2.0, (4, 1): 2.0})
        curl = apply_operator(coboundary(c4_complex, 1), x)
        assert curl.values.shape == (0,)

    def test_laplacian_kills_constants(self, rng):
        g = random_graph(rng, 8, 0.6)
        cx = enumerate_cliques(g, 3)
        const = Cochain(0, cx, np.full(8, 3.7))
        out = apply_operator(hodge_laplacian(cx, 0), const)
        assert np.allclose(out.values, 0.0, atol=1e-12)

    def test_degree_mismatch(self, c3_complex):
        f = Cochain.zero(c3_complex, 0)
        with pytest.raises(ValueError, match="degree"):
            apply_operator(coboundary(c3_complex, 1), f)

    def test_weighted_apply_matches_operator_action(self, rng):
        g = cycle_graph(5)
        cx = enumerate_cliques(g, 3)
        w = WeightScheme.from_table({(v,): float(rng.uniform(0.5, 2)) for v in range(1, 6)})
        f = Cochain(0, cx, rng.normal(size=5))
        lap = hodge_laplacian(cx, 0, w)
        got = apply_operator(lap, f).values
        down = coboundary(cx, 0)
        expected = adjoint(down, w).toarray() @ (down.matrix.toarray() @ f.values)
        assert np.allclose(got, expected, atol=1e-12)


class TestMatrixExport:
    def test_round_trip_bit_exact(self, rng):
        g = random_graph(rng, 8, 0.5)
        cx = enumerate_cliques(g, 3)
        op = coboundary(cx, 0)
        text = write_matrix(op.matrix)
        again = read_matrix(text)
        assert (again != op.matrix).nnz == 0
        assert write_matrix(again) == text

    def test_empty_matrix(self, c4_complex):
        op = coboundary(c4_complex, 1)
        text = write_matrix(op.matrix)
        again = read_matrix(text)
        assert again.shape == (0, 4)
