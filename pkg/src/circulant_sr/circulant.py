"""Circulant graphs C_n(S) and the graph predicates used by the theorem checks.

Graphs are stored as tuples of adjacency bitmasks over local indices
``0..k-1``; ``labels[i]`` gives the original vertex name of local index ``i``.
For a graph built from a :class:`CirculantSpec` the labels are ``0..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import SpecError


def circular_distance(k: int, n: int) -> int:
    k %= n
    return min(k, n - k)


@dataclass(frozen=True, order=True)
class CirculantSpec:
    """The pair ``(n, S)`` with ``S`` a subset of ``{1, ..., n // 2}``."""

    n: int
    S: tuple[int, ...] = ()

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise SpecError(f"n must be an integer, got {self.n!r}")
        if self.n < 2:
            raise SpecError(f"n must be >= 2, got {self.n}")
        s = tuple(sorted(set(int(x) for x in self.S)))
        half = self.n // 2
        bad = [x for x in s if not 1 <= x <= half]
        if bad:
            raise SpecError(f"entries {bad} of S lie outside [1, {half}] for n={self.n}")
        object.__setattr__(self, "S", s)

    @property
    def s(self) -> int:
        return len(self.S)

    @property
    def mask(self) -> int:
        """Bitmask of S with bit ``k-1`` set for ``k in S``; used for canonical ordering."""
        m = 0
        for k in self.S:
            m |= 1 << (k - 1)
        return m

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "CirculantSpec":
        return cls(n, tuple(k + 1 for k in range(n // 2) if mask >> k & 1))

    @classmethod
    def parse(cls, text: str) -> "CirculantSpec":
        """Parse ``"n:5;S:1,2"``."""
        parts = {}
        for chunk in text.split(";"):
            if not chunk.strip():
                continue
            key, _, value = chunk.partition(":")
            parts[key.strip().lower()] = value.strip()
        if "n" not in parts:
            raise SpecError(f"missing n in {text!r}")
        try:
            return cls(int(parts["n"]), parse_connection_set(parts.get("s", "")))
        except ValueError as exc:
            if isinstance(exc, SpecError):
                raise
            raise SpecError(f"cannot parse {text!r}: {exc}") from exc

    def __str__(self):
        return f"C_{self.n}({{{','.join(map(str, self.S))}}})"


def parse_connection_set(text: str) -> tuple[int, ...]:
    """Comma-separated integers; the empty string is the empty set."""
    text = text.strip().strip("{}")
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise SpecError(f"bad connection set {text!r}") from exc


def all_specs(n: int) -> Iterator[CirculantSpec]:
    """Every connection set for ``n`` in bitmask order."""
    for mask in range(1 << (n // 2)):
        yield CirculantSpec.from_mask(n, mask)


@dataclass(frozen=True)
class Graph:
    labels: tuple[int, ...]
    adj: tuple[int, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.labels) != len(self.adj):
            raise ValueError("labels and adjacency lengths differ")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.labels)})

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def index(self, v: int) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise SpecError(f"unknown vertex {v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[self.index(u)] >> self.index(v) & 1)

    def neighbors(self, v: int) -> list[int]:
        m = self.adj[self.index(v)]
        return [self.labels[i] for i in _bits(m)]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, m in enumerate(self.adj):
            for j in _bits(m >> (i + 1)):
                out.append((self.labels[i], self.labels[i + 1 + j]))
        return out

    def edge_count(self) -> int:
        return sum(popcount(m) for m in self.adj) // 2

    def complement(self) -> "Graph":
        full = (1 << self.vertex_count) - 1
        return Graph(self.labels, tuple(full & ~m & ~(1 << i) for i, m in enumerate(self.adj)))

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "Graph":
        labels = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(labels)}
        adj = [0] * len(labels)
        for u, v in edges:
            if u == v:
                raise SpecError(f"loop at {u}")
            try:
                i, j = index[u], index[v]
            except KeyError as exc:
                raise SpecError(f"edge {(u, v)} uses unknown vertex") from exc
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(labels, tuple(adj))


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def popcount(m: int) -> int:
    return bin(m).count("1")


def build_circulant(spec: CirculantSpec) -> Graph:
    n = spec.n
    adj = [0] * n
    for i in range(n):
        for k in spec.S:
            adj[i] |= 1 << ((i + k) % n) | 1 << ((i - k) % n)
    return Graph(tuple(range(n)), tuple(adj))


def complement_spec(spec: CirculantSpec) -> CirculantSpec:
    present = set(spec.S)
    return CirculantSpec(spec.n, tuple(k for k in range(1, spec.n // 2 + 1) if k not in present))


def edge_count_formula(spec: CirculantSpec) -> int:
    n, s = spec.n, spec.s
    if n % 2 == 0 and n // 2 in spec.S:
        return n * s - n // 2
    return n * s


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    keep = sorted(set(vertices))
    idx = [g.index(v) for v in keep]
    adj = []
    for i in idx:
        row = g.adj[i]
        adj.append(sum(1 << a for a, j in enumerate(idx) if row >> j & 1))
    return Graph(tuple(keep), tuple(adj))


def is_connected(g: Graph) -> bool:
    k = g.vertex_count
    if k == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for i in _bits(frontier):
            nxt |= g.adj[i]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << k) - 1


def _is_clique(g: Graph, mask: int) -> bool:
    for i in _bits(mask):
        if (mask & ~(1 << i)) & ~g.adj[i]:
            return False
    return True


def has_perfect_elimination_order(g: Graph, order: Sequence[int]) -> bool:
    """True iff every vertex's later neighbours in ``order`` form a clique."""
    order = list(order)
    if sorted(order) != list(g.labels):
        raise SpecError("order is not a permutation of the vertex set")
    later = 0
    for v in reversed(order):
        i = g.index(v)
        if not _is_clique(g, g.adj[i] & later):
            return False
        later |= 1 << i
    return True


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of MCS (ties broken by smallest local index)."""
    k = g.vertex_count
    weight = [0] * k
    visited = 0
    order = []
    for _ in range(k):
        best = max((i for i in range(k) if not visited >> i & 1), key=lambda i: (weight[i], -i))
        order.append(g.labels[best])
        visited |= 1 << best
        for j in _bits(g.adj[best] & ~visited):
            weight[j] += 1
    return order


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """A PEO if the graph is chordal, else ``None``.

    The reverse of an MCS visit order is a PEO exactly when the graph is chordal.
    """
    order = maximum_cardinality_search(g)[::-1]
    return order if has_perfect_elimination_order(g, order) else None


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None
