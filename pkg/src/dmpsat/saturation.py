"""Saturation predicates for the degree-monotone path number.

G is saturated when every edge addition strictly increases mp; G is
k-saturated when mp(G) < k and every edge addition pushes mp to at least k.
Complete graphs K_m with m <= k-1 are k-saturated by convention, which the
computation reproduces naturally: mp(K_m) = m < k and there is nothing to
add.  Complete graphs with m >= k are not k-saturated (mp = m >= k).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .paths import DmPath, mp, mp_at_least, mp_witness_at_least
from ._backend import mp_solve


@dataclass(frozen=True, slots=True)
class SaturationReport:
    """Outcome of a saturation check with certificates either way.

    ``violations`` lists every non-edge whose addition breaks the tested
    predicate, with the exact mp of the augmented graph; ``witnesses`` maps
    each satisfying non-edge to a degree-monotone path in G+e long enough to
    witness the predicate.  In fast mode only the verdict and the first
    violation are populated and ``saturated`` may be None for k-runs.
    """

    mp_value: int
    saturated: bool | None
    k: int | None = None
    k_saturated: bool | None = None
    violations: tuple[tuple[tuple[int, int], int], ...] = ()
    witnesses: dict[tuple[int, int], DmPath] = field(default_factory=dict)


def _full_report(g: Graph, k: int | None) -> SaturationReport:
    base = mp(g)
    threshold = base + 1 if k is None else k
    violations = []
    witnesses = {}
    plain = True
    for e in g.non_edges():
        h = g.add_edge(*e)
        value, path = mp_solve(h.n, h.adj, h.n + 1)
        if value <= base:
            plain = False
        if value < threshold:
            violations.append((e, value))
        else:
            witnesses[e] = DmPath(path, tuple(h.degree(v) for v in path))
    if k is None:
        return SaturationReport(base, plain, violations=tuple(violations),
                                witnesses=witnesses)
    k_sat = base < k and not violations
    return SaturationReport(base, plain, k=k, k_saturated=k_sat,
                            violations=tuple(violations), witnesses=witnesses)


def is_saturated(g: Graph, fast: bool = False) -> SaturationReport:
    """Does every edge addition strictly increase mp?  Vacuously true for K_n."""
    if not fast:
        return _full_report(g, None)
    base = mp(g)
    for e in g.non_edges():
        h = g.add_edge(*e)
        if not mp_at_least(h, base + 1):
            return SaturationReport(base, False, violations=((e, mp(h)),))
    return SaturationReport(base, True)


def is_k_saturated(g: Graph, k: int, fast: bool = False) -> SaturationReport:
    """Is mp(G) < k while every edge addition reaches mp >= k?"""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if not fast:
        return _full_report(g, k)
    base = mp(g)
    if base >= k:
        return SaturationReport(base, None, k=k, k_saturated=False)
    for e in g.non_edges():
        h = g.add_edge(*e)
        if not mp_at_least(h, k):
            return SaturationReport(base, None, k=k, k_saturated=False,
                                    violations=((e, mp(h)),))
    return SaturationReport(base, True, k=k, k_saturated=True)


def saturated_fast(g: Graph) -> bool:
    return bool(is_saturated(g, fast=True).saturated)


def k_saturated_fast(g: Graph, k: int) -> bool:
    """Early-exit boolean used by the exhaustive searches."""
    if mp_at_least(g, k):
        return False
    for e in g.non_edges():
        if not mp_at_least(g.add_edge(*e), k):
            return False
    return True


def witness_for_edge(g: Graph, e: tuple[int, int], k: int) -> DmPath | None:
    """A degree-monotone path on >= k vertices in g+e, if any."""
    return mp_witness_at_least(g.add_edge(*e), k)
