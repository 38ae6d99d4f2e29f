"""Alternating k-cochains on a clique complex and weighted inner products.

A k-cochain stores one float per (k+1)-clique, in the complex's lexicographic
clique order. Values are coordinates with respect to the canonical orientation
"ascending vertex order"; evaluation at any other argument order picks up the
sign of the sorting permutation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .complexes import CliqueComplex, InputFormatError


def sort_with_sign(vertices) -> tuple[tuple[int, ...], int]:
    """Sort a vertex tuple, returning (sorted tuple, permutation sign).

    Sign is 0 when a vertex repeats (an alternating function vanishes there).
    Insertion sort is fine: tuples have at most a handful of entries.
    """
    t = list(vertices)
    sign = 1
    for i in range(1, len(t)):
        j = i
        while j > 0 and t[j - 1] > t[j]:
            t[j - 1], t[j] = t[j], t[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(t, t[1:]):
        if a == b:
            return tuple(t), 0
    return tuple(t), sign


@dataclass(frozen=True)
class WeightScheme:
    """Positive weight per clique per level; permutation-invariant by construction.

    mode "unit" weighs every clique 1. mode "table" reads weights from per-order
    dictionaries keyed by ascending clique tuples; omitted cliques weigh 1.
    """

    mode: str = "unit"
    tables: dict[int, dict[tuple[int, ...], float]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.mode not in ("unit", "table"):
            raise ValueError(f"unknown weight mode {self.mode!r}")
        for order, table in self.tables.items():
            for clique, w in table.items():
                if not w > 0:
                    raise ValueError(f"weight for {clique} (order {order}) must be positive, got {w}")

    @classmethod
    def unit(cls) -> "WeightScheme":
        return cls()

    @classmethod
    def from_table(cls, entries: dict[tuple[int, ...], float]) -> "WeightScheme":
        """Build a table scheme from one flat {clique: weight} mapping."""
        tables: dict[int, dict[tuple[int, ...], float]] = {}
        for clique, w in entries.items():
            key, _ = sort_with_sign(clique)
            tables.setdefault(len(key), {})[key] = float(w)
        return cls("table", tables)

    def weight(self, clique: tuple[int, ...]) -> float:
        if self.mode == "unit":
            return 1.0
        return self.tables.get(len(clique), {}).get(clique, 1.0)

    def vector(self, cx: CliqueComplex, degree: int) -> np.ndarray:
        """Weights of all (degree+1)-cliques in the complex's canonical order."""
        cliques = cx.cliques(degree + 1)
        if self.mode == "unit":
            return np.ones(len(cliques))
        table = self.tables.get(degree + 1, {})
        return np.array([table.get(c, 1.0) for c in cliques], dtype=float)


@dataclass(frozen=True)
class Cochain:
    """Alternating k-cochain: degree, owning complex, and dense coordinates."""

    degree: int
    complex: CliqueComplex
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("cochain degree must be >= 0")
        vals = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", vals)
        expected = self.complex.n_cliques(self.degree + 1)
        if vals.shape != (expected,):
            raise ValueError(
                f"degree-{self.degree} cochain needs {expected} values, got shape {vals.shape}"
            )

    @classmethod
    def zero(cls, cx: CliqueComplex, degree: int) -> "Cochain":
        return cls(degree, cx, np.zeros(cx.n_cliques(degree + 1)))

    @classmethod
    def from_dict(cls, cx: CliqueComplex, degree: int, entries: dict[tuple[int, ...], float]) -> "Cochain":
        """Build from {vertex tuple: value}; tuples may be in any order (signs applied)."""
        vals = np.zeros(cx.n_cliques(degree + 1))
        index = cx.index(degree + 1)
        for key, v in entries.items():
            sorted_key, sign = sort_with_sign(tuple(int(x) for x in key))
            if sign == 0:
                raise ValueError(f"repeated vertex in {key}")
            if sorted_key not in index:
                raise ValueError(f"{sorted_key} is not a clique of order {degree + 1}")
            vals[index[sorted_key]] = sign * float(v)
        return cls(degree, cx, vals)

    def eval(self, vertices) -> float:
        """Value at a vertex tuple, with the alternating sign convention.

        Returns 0 for repeated vertices and for tuples that are not cliques.
        """
        t = tuple(int(v) for v in vertices)
        if len(t) != self.degree + 1:
            raise ValueError(f"expected {self.degree + 1} vertices, got {len(t)}")
        n = self.complex.graph.n_vertices
        for v in t:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} out of range 1..{n}")
        sorted_t, sign = sort_with_sign(t)
        if sign == 0:
            return 0.0
        idx = self.complex.index(self.degree + 1).get(sorted_t)
        if idx is None:
            return 0.0
        return sign * float(self.values[idx])

    def __neg__(self) -> "Cochain":
        return Cochain(self.degree, self.complex, -self.values)

    def __add__(self, other: "Cochain") -> "Cochain":
        _check_compatible(self, other)
        return Cochain(self.degree, self.complex, self.values + other.values)

    def __sub__(self, other: "Cochain") -> "Cochain":
        _check_compatible(self, other)
        return Cochain(self.degree, self.complex, self.values - other.values)

    def __mul__(self, scalar: float) -> "Cochain":
        return Cochain(self.degree, self.complex, self.values * float(scalar))

    __rmul__ = __mul__


def _check_compatible(f: Cochain, g: Cochain) -> None:
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    if f.complex != g.complex:
        raise ValueError("cochains live on different complexes")


def inner_product(f: Cochain, g: Cochain, weights: WeightScheme | None = None) -> float:
    """Weighted inner product, summing over each clique exactly once."""
    _check_compatible(f, g)
    w = (weights or WeightScheme.unit()).vector(f.complex, f.degree)
    return float(np.dot(w * f.values, g.values))


def norm(f: Cochain, weights: WeightScheme | None = None) -> float:
    return float(np.sqrt(max(inner_product(f, f, weights), 0.0)))


def read_cochain_tsv(text: str, cx: CliqueComplex, degree: int | None = None) -> Cochain:
    """Parse cochain TSV: lines of vertex ids followed by a value.

    The degree is inferred from the first data line unless given. Non-ascending
    index tuples are normalized by sorting and flipping the sign. Omitted
    cliques default to 0; naming the same clique twice is an error.
    """
    entries: dict[tuple[int, ...], float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise InputFormatError(f"line {lineno}: expected vertex ids and a value")
        try:
            verts = tuple(int(t) for t in tokens[:-1])
            value = float(tokens[-1])
        except ValueError:
            raise InputFormatError(f"line {lineno}: non-numeric token") from None
        if degree is None:
            degree = len(verts) - 1
        if len(verts) != degree + 1:
            raise InputFormatError(
                f"line {lineno}: expected {degree + 1} vertex ids, got {len(verts)}"
            )
        key, sign = sort_with_sign(verts)
        if sign == 0:
            raise InputFormatError(f"line {lineno}: repeated vertex in {verts}")
        if key in entries:
            raise InputFormatError(f"line {lineno}: duplicate entry for clique {key}")
        entries[key] = sign * value
    if degree is None:
        raise InputFormatError("empty cochain document and no degree given")
    try:
        return Cochain.from_dict(cx, degree, entries)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None


def write_cochain_tsv(c: Cochain, fmt: str = "%.12g") -> str:
    """Serialize a cochain as one `i .. k value` line per clique, in canonical order."""
    lines = []
    for clique, v in zip(c.complex.cliques(c.degree + 1), c.values):
        lines.append(" ".join(str(i) for i in clique) + " " + fmt % v)
    return "\n".join(lines) + ("\n" if lines else "")


def read_weights_tsv(text: str) -> WeightScheme:
    """Parse weight TSV: vertex ids then a positive weight; omitted cliques weigh 1."""
    entries: dict[tuple[int, ...], float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise InputFormatError(f"line {lineno}: expected vertex ids and a weight")
        try:
            verts = tuple(int(t) for t in tokens[:-1])
            value = float(tokens[-1])
        except ValueError:
            raise InputFormatError(f"line {lineno}: non-numeric token") from None
        if value <= 0:
            raise InputFormatError(f"line {lineno}: weight must be positive, got {value}")
        key, sign = sort_with_sign(verts)
        if sign == 0:
            raise InputFormatError(f"line {lineno}: repeated vertex in {verts}")
        if key in entries:
            raise InputFormatError(f"line {lineno}: duplicate weight for {key}")
        entries[key] = value
    return WeightScheme.from_table(entries)
