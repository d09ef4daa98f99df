"""Degree-monotone paths: exact mp(G), witnesses, and a brute-force oracle.

A degree-monotone path is a simple path whose vertex degrees (taken in the
host graph) form a non-decreasing or non-increasing sequence; mp(G) is the
maximum number of VERTICES on such a path.  A single vertex counts as a
path, so mp(G) >= 1, with equality iff G has no edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import mp_solve
from .graph import Graph, GraphError

#: The oracle enumerates every simple path; factorial growth caps it here.
ORACLE_LIMIT = 8


@dataclass(frozen=True, slots=True)
class DmPath:
    """A witness path with its degree sequence in the host graph."""

    vertices: tuple[int, ...]
    degrees: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def _monotone(seq) -> bool:
    return (all(a <= b for a, b in zip(seq, seq[1:]))
            or all(a >= b for a, b in zip(seq, seq[1:])))


def is_valid_dm_path(g: Graph, vertices) -> bool:
    """Check the DmPath invariants: simple, consecutive-adjacent, monotone."""
    if len(vertices) < 1 or len(set(vertices)) != len(vertices):
        return False
    if not all(0 <= v < g.n for v in vertices):
        return False
    if not all(g.has_edge(u, v) for u, v in zip(vertices, vertices[1:])):
        return False
    return _monotone([g.degree(v) for v in vertices])


def dm_path(g: Graph, vertices) -> DmPath:
    """Build a validated DmPath in g."""
    if not is_valid_dm_path(g, vertices):
        raise GraphError(f"{vertices} is not a degree-monotone path")
    return DmPath(tuple(vertices), tuple(g.degree(v) for v in vertices))


def mp(g: Graph) -> int:
    """The number of vertices on a longest degree-monotone path."""
    return mp_solve(g.n, g.adj, g.n + 1)[0]


def mp_witness(g: Graph) -> DmPath:
    """A longest degree-monotone path (non-decreasing orientation)."""
    _, path = mp_solve(g.n, g.adj, g.n + 1)
    return dm_path(g, path)


def mp_at_least(g: Graph, k: int) -> bool:
    """True iff mp(g) >= k, with early exit; exact but cheaper than mp()."""
    if k <= 1:
        return True
    if k > g.n:
        return False
    return mp_solve(g.n, g.adj, k)[0] >= k


def mp_witness_at_least(g: Graph, k: int) -> DmPath | None:
    """A degree-monotone path on >= k vertices if one exists, else None."""
    if k <= 1:
        return dm_path(g, (0,))
    if k > g.n:
        return None
    length, path = mp_solve(g.n, g.adj, k)
    return dm_path(g, path) if length >= k else None


def mp_oracle(g: Graph) -> int:
    """Independent reference for mp: enumerate all simple paths, filter, max.

    Deliberately shares no logic with the solver: plain DFS generates every
    simple path and the monotonicity predicate is evaluated per path on the
    full degree sequence.
    """
    if g.n > ORACLE_LIMIT:
        raise GraphError(f"oracle supports at most {ORACLE_LIMIT} vertices, got {g.n}")
    deg = g.degrees()
    best = 1

    def visit(path: list[int], used: int) -> None:
        nonlocal best
        if len(path) > best and _monotone([deg[v] for v in path]):
            best = len(path)
        tail = path[-1]
        for w in g.neighbors(tail):
            if not used >> w & 1:
                path.append(w)
                visit(path, used | 1 << w)
                path.pop()

    for v in range(g.n):
        visit([v], 1 << v)
    return best
