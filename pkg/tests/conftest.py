"""Shared fixtures: golden graphs, random generators, and independent oracles."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np
import pytest

from graphhodge import Graph, enumerate_cliques


# Two labeled directed graphs with identical graph-Laplacian spectra that the
# degree-1 Laplacian tells apart, and two that no Hodge Laplacian tells apart.
# Edges are kept in their original letter order with their printed directions
# so operator matrices can be compared row by row.

@dataclass(frozen=True)
class GoldenGraph:
    n: int
    directed_edges: tuple[tuple[int, int], ...]  # letter order a, b, c, ...

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.directed_edges)

    @property
    def edge_signs(self) -> np.ndarray:
        """+1 where the printed direction is ascending, -1 where descending."""
        return np.array([1.0 if u < v else -1.0 for u, v in self.directed_edges])

    def edge_positions(self, cx) -> list[int]:
        """Position of each lettered edge in the complex's lexicographic edge list."""
        index = cx.index(2)
        return [index[tuple(sorted(e))] for e in self.directed_edges]


LAP_ISO_A = GoldenGraph(6, ((1, 2), (2, 3), (3, 4), (4, 1), (3, 5), (5, 6), (3, 6)))
LAP_ISO_B = GoldenGraph(6, ((1, 2), (2, 3), (3, 4), (4, 1), (3, 5), (4, 6), (6, 2)))
FULL_ISO_A = GoldenGraph(7, ((2, 1), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (4, 7)))
FULL_ISO_B = GoldenGraph(7, ((2, 1), (1, 3), (2, 3), (3, 4), (4, 5), (3, 6), (4, 7)))

GRAD_A = np.array([
    [-1, 1, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0],
    [0, 0, -1, 1, 0, 0],
    [1, 0, 0, -1, 0, 0],
    [0, 0, -1, 0, 1, 0],
    [0, 0, 0, 0, -1, 1],
    [0, 0, -1, 0, 0, 1],
], dtype=float)

CURL_A = np.array([[0, 0, 0, 0, 1, 1, -1]], dtype=float)

LAPLACIAN_A = np.array([
    [2, -1, 0, -1, 0, 0],
    [-1, 2, -1, 0, 0, 0],
    [0, -1, 4, -1, -1, -1],
    [-1, 0, -1, 2, 0, 0],
    [0, 0, -1, 0, 2, -1],
    [0, 0, -1, 0, -1, 2],
], dtype=float)

LAPLACIAN_B = np.array([
    [2, -1, 0, -1, 0, 0],
    [-1, 3, -1, 0, 0, -1],
    [0, -1, 3, -1, -1, 0],
    [-1, 0, -1, 3, 0, -1],
    [0, 0, -1, 0, 1, 0],
    [0, -1, 0, -1, 0, 2],
], dtype=float)

HELMHOLTZIAN_A = np.array([
    [2, -1, 0, -1, 0, 0, 0],
    [-1, 2, -1, 0, -1, 0, -1],
    [0, -1, 2, -1, 1, 0, 1],
    [-1, 0, -1, 2, 0, 0, 0],
    [0, -1, 1, 0, 3, 0, 0],
    [0, 0, 0, 0, 0, 3, 0],
    [0, -1, 1, 0, 0, 0, 3],
], dtype=float)

HELMHOLTZIAN_B = np.array([
    [2, -1, 0, -1, 0, 0, 1],
    [-1, 2, -1, 0, -1, 0, -1],
    [0, -1, 2, -1, 1, -1, 0],
    [-1, 0, -1, 2, 0, 1, 0],
    [0, -1, 1, 0, 2, 0, 0],
    [0, 0, -1, 1, 0, 2, -1],
    [1, -1, 0, 0, 0, -1, 2],
], dtype=float)

SHARED_SPECTRUM_0 = np.sort([0.0, 3 - np.sqrt(5), 2.0, 3.0, 3.0, 3 + np.sqrt(5)])
SPECTRUM_1_A = np.sort([0.0, 3 - np.sqrt(5), 2.0, 3.0, 3.0, 3.0, 3 + np.sqrt(5)])
SPECTRUM_1_B = np.sort([0.0, 0.0, 3 - np.sqrt(5), 2.0, 3.0, 3.0, 3 + np.sqrt(5)])


def cycle_graph(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.from_edges(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def wheel_graph(n: int) -> Graph:
    """Hub vertex n joined to every vertex of an (n-1)-cycle."""
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(1, n - 1)]
    spokes = [(i, n) for i in range(1, n)]
    return Graph.from_edges(n, rim + spokes)


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: np.random.Generator, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus extra random edges."""
    edges = set()
    order = list(rng.permutation(np.arange(1, n + 1)))
    for i in range(1, n):
        j = int(rng.integers(0, i))
        u, v = int(order[i]), int(order[j])
        edges.add((min(u, v), max(u, v)))
    for u, v in combinations(range(1, n + 1), 2):
        if rng.random() < extra:
            edges.add((u, v))
    return Graph(n, frozenset(edges))


def random_interval_graph(rng: np.random.Generator, n: int) -> Graph:
    """Intersection graph of random intervals; always chordal."""
    lo = rng.random(n)
    length = rng.random(n) * 0.6
    hi = lo + length
    edges = [
        (i + 1, j + 1)
        for i, j in combinations(range(n), 2)
        if lo[i] <= hi[j] and lo[j] <= hi[i]
    ]
    return Graph.from_edges(n, edges)


def brute_force_cliques(graph: Graph, order: int) -> list[tuple[int, ...]]:
    out = []
    for subset in combinations(range(1, graph.n_vertices + 1), order):
        if all((a, b) in graph.edges for a, b in combinations(subset, 2)):
            out.append(subset)
    return out


def union_find_components(graph: Graph) -> int:
    parent = list(range(graph.n_vertices + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in graph.edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(1, graph.n_vertices + 1)})


def kendall_tau_distance(order_a, order_b) -> int:
    """Number of discordant pairs between two orderings of the same items."""
    pos = {item: i for i, item in enumerate(order_b)}
    seq = [pos[item] for item in order_a]
    return sum(
        1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j]
    )


def pinv_split(A_down: np.ndarray, A_up: np.ndarray, x: np.ndarray):
    """Dense pseudoinverse oracle for the unit-weight decomposition of x.

    exact = A_down pinv(A_down) restricted projection onto im(A_down),
    coexact = projection onto im(A_up^T); harmonic is the leftover.
    """
    if A_down.size:
        proj_exact = A_down @ np.linalg.pinv(A_down)
        exact = proj_exact @ x
    else:
        exact = np.zeros_like(x)
    if A_up.size:
        up_t = A_up.T
        proj_coexact = up_t @ np.linalg.pinv(up_t)
        coexact = proj_coexact @ x
    else:
        coexact = np.zeros_like(x)
    return exact, x - exact - coexact, coexact


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


@pytest.fixture
def lap_iso_pair():
    return LAP_ISO_A, LAP_ISO_B


@pytest.fixture
def full_iso_pair():
    return FULL_ISO_A, FULL_ISO_B


@pytest.fixture
def c3_complex():
    return enumerate_cliques(cycle_graph(3), 3)


@pytest.fixture
def c4_complex():
    return enumerate_cliques(cycle_graph(4), 3)
