"""Isomorph-free exhaustive enumeration of graphs on a fixed vertex count.

Orderly generation: a labeled graph is kept iff its adjacency word (upper
triangle, column-major) is maximal over all relabelings.  Deleting the
last-position edge of such a graph leaves another such graph, so extending
each kept graph by one edge strictly past its last edge position visits
every isomorphism class exactly once, stratified by edge count.
"""

from __future__ import annotations

from typing import Iterator

from ._backend import is_max_word
from .graph import Graph, GraphError

#: Enumeration is exhaustive search; n=10 already takes hours unrestricted.
ENUM_LIMIT = 10


def pair_position(i: int, j: int) -> int:
    """Column-major index of the pair (i, j), i < j."""
    return j * (j - 1) // 2 + i


def pair_at(pos: int) -> tuple[int, int]:
    """Inverse of pair_position."""
    j = 1
    while pair_position(0, j + 1) <= pos:
        j += 1
    return pos - pair_position(0, j), j


def _last_edge_position(g: Graph) -> int:
    for j in range(g.n - 1, 0, -1):
        col = g.adj[j] & ((1 << j) - 1)
        if col:
            return pair_position(col.bit_length() - 1, j)
    return -1


def orderly_children(g: Graph, last_pos: int | None = None) -> list[Graph]:
    """Canonical one-edge extensions of a canonical graph, in position order."""
    if last_pos is None:
        last_pos = _last_edge_position(g)
    total = g.n * (g.n - 1) // 2
    out = []
    for pos in range(last_pos + 1, total):
        i, j = pair_at(pos)
        if g.adj[i] >> j & 1:
            continue
        rows = list(g.adj)
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        masks = tuple(rows)
        if is_max_word(g.n, masks):
            out.append(Graph(g.n, masks))
    return out


def enumerate_graphs(n: int, m: int | None = None) -> Iterator[Graph]:
    """One representative per isomorphism class on n vertices.

    With ``m`` given, only classes with exactly m edges; otherwise all
    classes in ascending edge count.  Deterministic order.
    """
    if not 1 <= n <= ENUM_LIMIT:
        raise GraphError(f"enumeration supports 1 <= n <= {ENUM_LIMIT}, got {n}")
    total = n * (n - 1) // 2
    if m is not None and not 0 <= m <= total:
        raise GraphError(f"edge count {m} out of range for n={n}")
    level = [Graph.edgeless(n)]
    if m is None or m == 0:
        yield from level
        if m == 0:
            return
    for cur in range(1, (total if m is None else m) + 1):
        nxt: list[Graph] = []
        for g in level:
            nxt.extend(orderly_children(g))
        level = nxt
        if m is None or cur == m:
            yield from level
    return


def count_graphs(n: int, m: int | None = None) -> int:
    return sum(1 for _ in enumerate_graphs(n, m))
