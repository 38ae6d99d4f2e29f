"""Strategy-profile graphs, game flows, and potential/harmonic game structure.

Profiles are the vertices; two profiles are adjacent when they differ in the
strategy of exactly one player. The game flow assigns to each such edge the
payoff change of the moving player, which is the edge restriction of the
utility Jacobian. Game flows are always curl-free (payoff differences along a
single player's strategy triple telescope), so they split into a potential
part -grad f and a harmonic part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .cochains import Cochain, WeightScheme
from .complexes import CliqueComplex, Graph, enumerate_cliques
from .decompose import hodge_decompose
from .operators import apply_operator, coboundary, hodge_laplacian

PREDICATE_TOL = 1e-10


@dataclass(frozen=True)
class GameForm:
    """Finite normal-form game: per-player strategy labels and dense utility tables."""

    strategy_sets: tuple[tuple[str, ...], ...]
    utilities: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        if not self.strategy_sets:
            raise ValueError("game needs at least one player")
        shape = tuple(len(s) for s in self.strategy_sets)
        if any(size == 0 for size in shape):
            raise ValueError("every player needs at least one strategy")
        for labels in self.strategy_sets:
            if len(set(labels)) != len(labels):
                raise ValueError(f"duplicate strategy label in {labels}")
        if len(self.utilities) != len(self.strategy_sets):
            raise ValueError("one utility table per player is required")
        tables = tuple(np.asarray(u, dtype=float) for u in self.utilities)
        object.__setattr__(self, "utilities", tables)
        for i, table in enumerate(tables):
            if table.shape != shape:
                raise ValueError(f"utility table {i} has shape {table.shape}, expected {shape}")

    @property
    def n_players(self) -> int:
        return len(self.strategy_sets)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.strategy_sets)

    @classmethod
    def from_tables(cls, strategies, tables) -> "GameForm":
        """Build from label lists and per-player mappings keyed by comma-joined profiles."""
        strategy_sets = tuple(tuple(str(s) for s in labels) for labels in strategies)
        shape = tuple(len(s) for s in strategy_sets)
        utilities = []
        for player, table in enumerate(tables):
            arr = np.zeros(shape)
            seen = 0
            for idx in np.ndindex(shape):
                profile = tuple(strategy_sets[i][idx[i]] for i in range(len(shape)))
                key = ",".join(profile)
                if key not in table:
                    raise ValueError(f"utility table {player} misses profile {key!r}")
                arr[idx] = float(table[key])
                seen += 1
            if len(table) != seen:
                extra = set(table) - {
                    ",".join(tuple(strategy_sets[i][idx[i]] for i in range(len(shape))))
                    for idx in np.ndindex(shape)
                }
                raise ValueError(f"utility table {player} has unknown profiles {sorted(extra)}")
            utilities.append(arr)
        return cls(strategy_sets, tuple(utilities))

    def profiles(self) -> tuple[tuple[str, ...], ...]:
        """All strategy profiles in lexicographic order of strategy indices."""
        return tuple(product(*self.strategy_sets))


@dataclass(frozen=True)
class StrategyGraph:
    """Profile graph with the profile <-> vertex correspondence and its complex."""

    graph: Graph
    profiles: tuple[tuple[str, ...], ...]
    index: dict[tuple[str, ...], int] = field(repr=False)
    complex: CliqueComplex = field(repr=False)


def strategy_graph(form: GameForm) -> StrategyGraph:
    """Vertices are profiles; edges join profiles differing in exactly one coordinate."""
    profiles = form.profiles()
    index = {p: i + 1 for i, p in enumerate(profiles)}
    shape = form.shape
    strides = np.zeros(len(shape), dtype=int)
    acc = 1
    for i in reversed(range(len(shape))):
        strides[i] = acc
        acc *= shape[i]
    edges = set()
    for flat, idx in enumerate(np.ndindex(shape)):
        for player, size in enumerate(shape):
            for alt in range(idx[player] + 1, size):
                other = flat + (alt - idx[player]) * strides[player]
                edges.add((flat + 1, other + 1))
    graph = Graph(len(profiles), frozenset(edges))
    cx = enumerate_cliques(graph, max_order=3)
    return StrategyGraph(graph, profiles, index, cx)


def _edge_mover(idx_u: tuple[int, ...], idx_v: tuple[int, ...]) -> int:
    movers = [i for i, (a, b) in enumerate(zip(idx_u, idx_v)) if a != b]
    if len(movers) != 1:
        raise ValueError(f"profiles {idx_u} and {idx_v} do not differ in exactly one player")
    return movers[0]


def game_flow(form: GameForm, sg: StrategyGraph | None = None) -> Cochain:
    """Edge flow X(s,t) = f_i(t) - f_i(s) for the unique player i moving between s and t."""
    sg = sg or strategy_graph(form)
    indices = list(np.ndindex(form.shape))
    values = {}
    for u, v in sg.graph.sorted_edges:
        idx_u, idx_v = indices[u - 1], indices[v - 1]
        mover = _edge_mover(idx_u, idx_v)
        values[(u, v)] = float(form.utilities[mover][idx_v] - form.utilities[mover][idx_u])
    return Cochain.from_dict(sg.complex, 1, values)


def is_potential_game(form: GameForm, tol: float = PREDICATE_TOL) -> bool:
    """True when all players' utility gradients coincide on the profile graph."""
    sg = strategy_graph(form)
    indices = list(np.ndindex(form.shape))
    for u, v in sg.graph.sorted_edges:
        idx_u, idx_v = indices[u - 1], indices[v - 1]
        grads = [float(f[idx_v] - f[idx_u]) for f in form.utilities]
        if max(grads) - min(grads) > tol:
            return False
    return True


def is_harmonic_game(form: GameForm, tol: float = PREDICATE_TOL) -> bool:
    """True when the summed utilities lie in the kernel of the profile-graph Laplacian."""
    sg = strategy_graph(form)
    total = np.zeros(form.shape)
    for f in form.utilities:
        total = total + f
    lap = hodge_laplacian(sg.complex, 0)
    values = apply_operator(lap, Cochain(0, sg.complex, total.reshape(-1))).values
    return bool(np.max(np.abs(values), initial=0.0) <= tol)


@dataclass(frozen=True)
class GameFlowSplit:
    """X = potential_flow + harmonic_flow with potential_flow = -grad(potential)."""

    potential_flow: Cochain
    potential: Cochain
    harmonic_flow: Cochain


def decompose_game_flow(x: Cochain, curl_tol: float = 1e-8) -> GameFlowSplit:
    """Split a curl-free flow on a profile graph into potential and harmonic parts.

    Raises if the input has curl beyond tolerance (then it was not a game flow)
    or if the decomposition produces a non-negligible curl-adjoint component.
    """
    scale = max(1.0, float(np.max(np.abs(x.values), initial=0.0)))
    curl = apply_operator(coboundary(x.complex, 1), x)
    curl_size = float(np.max(np.abs(curl.values), initial=0.0))
    if curl_size > curl_tol * scale:
        raise ValueError(f"input is not curl-free: max curl {curl_size:.3e}")
    split = hodge_decompose(x, WeightScheme.unit(), method="two-solve")
    coexact_size = float(np.max(np.abs(split.coexact.values), initial=0.0))
    if coexact_size > curl_tol * scale:
        raise ValueError(f"curl-adjoint component {coexact_size:.3e} exceeds tolerance")
    potential = -split.potential if split.potential is not None else Cochain.zero(x.complex, 0)
    return GameFlowSplit(split.exact, potential, x - split.exact)


def pure_nash(form: GameForm) -> list[tuple[str, ...]]:
    """All profiles where no player gains by a unilateral deviation (exhaustive scan)."""
    out = []
    for idx in np.ndindex(form.shape):
        stable = True
        for player, size in enumerate(form.shape):
            here = form.utilities[player][idx]
            for alt in range(size):
                if alt == idx[player]:
                    continue
                other = idx[:player] + (alt,) + idx[player + 1 :]
                if form.utilities[player][other] > here:
                    stable = False
                    break
            if not stable:
                break
        if stable:
            out.append(tuple(form.strategy_sets[i][idx[i]] for i in range(form.n_players)))
    return out
