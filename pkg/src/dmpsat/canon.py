"""Canonical forms: permutation-invariant keys for isomorphism classes.

The canonical form of G is the graph6 encoding of the relabeling of G that
minimizes the adjacency word over all relabelings consistent with the
equitable degree partition.  Two graphs have equal canonical forms iff they
are isomorphic.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import min_canon_perm
from .graph import Graph, GraphError
from .graph6 import graph6_encode

#: Exact canonicalization is backtracking search; keep it desk-scale.
CANON_LIMIT = 12


@dataclass(frozen=True, order=True, slots=True)
class CanonicalForm:
    """Total-order key; equal keys iff the underlying graphs are isomorphic."""

    bytes: bytes

    def __str__(self) -> str:
        return self.bytes.decode("ascii")


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation sigma (new position -> old vertex) of the canonical relabeling."""
    if g.n > CANON_LIMIT:
        raise GraphError(
            f"canonical form supports at most {CANON_LIMIT} vertices, got {g.n}")
    return min_canon_perm(g.n, g.adj)


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled representative of g's isomorphism class."""
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(graph6_encode(canonical_graph(g)).encode("ascii"))


def canonical_graph6(g: Graph) -> str:
    """graph6 string of the canonical representative (used for certificates)."""
    return graph6_encode(canonical_graph(g))
