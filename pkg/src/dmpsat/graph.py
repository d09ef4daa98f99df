"""Simple undirected graphs on at most 64 vertices, stored as bitset rows.

Vertices are the dense integers 0..n-1.  ``adj[v]`` is an integer whose
bit ``u`` is set iff ``u ~ v``.  Graphs are immutable values: every
mutating operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

#: Hard cap imposed by the one-machine-word-per-vertex representation.
MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or operation."""


@dataclass(frozen=True, slots=True)
class Graph:
    """An immutable simple undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"adjacency row {v} references vertices >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in range(v):
                if (self.adj[v] >> u & 1) != (self.adj[u] >> v & 1):
                    raise GraphError(f"adjacency not symmetric at ({u},{v})")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def edgeless(n: int) -> "Graph":
        """The graph on n vertices with no edges."""
        return Graph(n, (0,) * n)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list (pairs of distinct vertices)."""
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    # -- basic queries ------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        row = self.adj[v]
        out = []
        while row:
            low = row & -row
            out.append(low.bit_length() - 1)
            row ^= low
        return tuple(out)

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if self.adj[u] >> v & 1]

    def non_edges(self) -> list[tuple[int, int]]:
        """All non-adjacent pairs (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if not self.adj[u] >> v & 1]

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    # -- value-semantics mutation -------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        """Return this graph plus the edge uv; u and v must be non-adjacent."""
        if u == v:
            raise GraphError(f"cannot add loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")
        if self.adj[u] >> v & 1:
            raise GraphError(f"edge ({u},{v}) already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Relabel so that new vertex p is old vertex ``perm[p]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of 0..n-1")
        rows = []
        for p in range(self.n):
            old = self.adj[perm[p]]
            row = 0
            for q in range(self.n):
                if old >> perm[q] & 1:
                    row |= 1 << q
            rows.append(row)
        return Graph(self.n, tuple(rows))


# -- multi-graph constructions ---------------------------------------------


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Block-diagonal union; vertex and edge counts add."""
    if not graphs:
        raise GraphError("disjoint_union of an empty sequence")
    n = sum(g.n for g in graphs)
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(n, tuple(rows))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian (box) product; vertex (u, v) is labeled u*h.n + v."""
    n = g.n * h.n
    rows = [0] * n
    for u in range(g.n):
        for v in range(h.n):
            i = u * h.n + v
            row = 0
            nb = g.adj[u]
            while nb:
                low = nb & -nb
                row |= 1 << ((low.bit_length() - 1) * h.n + v)
                nb ^= low
            nb = h.adj[v]
            while nb:
                low = nb & -nb
                row |= 1 << (u * h.n + low.bit_length() - 1)
                nb ^= low
            rows[i] = row
    return Graph(n, tuple(rows))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex partition into connected components, each sorted, ordered by minimum."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= g.adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        members = []
        while comp:
            low = comp & -comp
            members.append(low.bit_length() - 1)
            comp ^= low
        out.append(members)
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi G(n, p) sample from an externally seeded ``random.Random``."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)
