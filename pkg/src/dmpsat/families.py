"""Parameterized graph families used by the saturation constructions.

Labeling conventions are fixed so graph6 output is reproducible:

* ``star(n)``: center 0, leaves 1..n-1.
* ``path(n)``: 0-1-...-(n-1).
* ``cycle(n)``: 0-1-...-(n-1)-0.
* ``matching(n)``: edges (0,1), (2,3), ...
* ``matching_plus_p3(n)``: path 0-1-2, then edges (3,4), (5,6), ...
* ``triangle_packing(n)``: triangles on {3i, 3i+1, 3i+2}.
* ``k4_minus_e`` / ``k5_minus_e``: complete minus the last pair.
* ``bowtie``: triangles {0,1,2} and {0,3,4} sharing vertex 0.
* ``p3_box_kt(t)``: rows of the product path-of-3 x K_t; top row 0..t-1 and
  bottom row 2t..3t-1 have degree t, middle row t..2t-1 has degree t+1.
* ``cone(g)``: g plus a new vertex n adjacent to everything.
* ``alternating_wheel(n)``: even cycle on 0..2n-1 plus hub 2n joined to the
  even-indexed rim vertices (which then have degree 3, the others 2).
* ``h4_extremal(n)``: sparsest 4-saturated graph on n vertices.
* ``five_sat_mix(n)``: 5-saturated graph on n >= 8 vertices from disjoint
  copies of p3_box_kt(2), K_4 and K_5-e chosen by n mod 6.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, GraphError, cartesian_product, disjoint_union


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def matching(n: int) -> Graph:
    if n < 2 or n % 2:
        raise GraphError("matching needs even n >= 2")
    return Graph.from_edges(n, [(i, i + 1) for i in range(0, n, 2)])


def matching_plus_p3(n: int) -> Graph:
    if n < 3 or n % 2 == 0:
        raise GraphError("matching_plus_p3 needs odd n >= 3")
    edges = [(0, 1), (1, 2)] + [(i, i + 1) for i in range(3, n, 2)]
    return Graph.from_edges(n, edges)


def triangle_packing(n: int) -> Graph:
    if n < 3 or n % 3:
        raise GraphError("triangle_packing needs n divisible by 3")
    edges = []
    for b in range(0, n, 3):
        edges += [(b, b + 1), (b, b + 2), (b + 1, b + 2)]
    return Graph.from_edges(n, edges)


def k4_minus_e() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def k5_minus_e() -> Graph:
    edges = [e for e in combinations(range(5), 2) if e != (3, 4)]
    return Graph.from_edges(5, edges)


def bowtie() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def p3_box_kt(t: int) -> Graph:
    """Box product of the 3-vertex path with K_t: 3t vertices, t(3t+1)/2 edges."""
    if t < 1:
        raise GraphError("p3_box_kt needs t >= 1")
    return cartesian_product(path(3), complete(t))


def cone(g: Graph) -> Graph:
    """g plus a dominating apex (new vertex g.n, adjacent to all)."""
    rows = [row | 1 << g.n for row in g.adj]
    rows.append((1 << g.n) - 1)
    return Graph(g.n + 1, tuple(rows))


def alternating_wheel(n: int) -> Graph:
    """C_{2n} plus a hub on alternate rim vertices: 2n+1 vertices, 3n edges.

    mp is 3 for n >= 4 (and 4 at n = 3, where the hub degree ties the rim);
    the family is 5-saturated although hub and rim degrees differ by >= 1.
    """
    if n < 3:
        raise GraphError("alternating_wheel needs n >= 3")
    edges = [(i, (i + 1) % (2 * n)) for i in range(2 * n)]
    edges += [(2 * n, i) for i in range(0, 2 * n, 2)]
    return Graph.from_edges(2 * n + 1, edges)


def h4_extremal(n: int) -> Graph:
    """A 4-saturated graph on n vertices with n (n = 0 mod 3) or n+1 edges."""
    if n < 3:
        raise GraphError("h4_extremal needs n >= 3")
    r = n % 3
    if r == 0:
        return triangle_packing(n)
    if r == 1:
        if n < 4:
            raise GraphError("h4_extremal with n = 1 mod 3 needs n >= 4")
        parts = [triangle_packing(n - 4)] if n > 4 else []
        return disjoint_union(parts + [k4_minus_e()])
    if n < 5:
        raise GraphError("h4_extremal with n = 2 mod 3 needs n >= 5")
    parts = [triangle_packing(n - 5)] if n > 5 else []
    return disjoint_union(parts + [bowtie()])


#: Residue table for the 5-saturated mix: copies of (p3_box_kt(2), K_4, K_5-e).
_FIVE_SAT_RECIPES = {
    0: (0, 0, 0),
    1: (13, 2, 1),
    2: (8, 2, 0),
    3: (9, 1, 1),
    4: (4, 1, 0),
    5: (5, 0, 1),
}


def five_sat_mix(n: int) -> Graph:
    """A 5-saturated graph on n >= 8 vertices; edge count (7n + c)/6.

    The additive constant c depends on n mod 6 and is 0, 35, 16, 27, 8, 19
    for residues 0..5 (the mix is x copies of p3_box_kt(2) plus K_4s and a
    K_5-e as listed in _FIVE_SAT_RECIPES).
    """
    if n < 8:
        raise GraphError("five_sat_mix needs n >= 8")
    base, k4s, k5es = _FIVE_SAT_RECIPES[n % 6]
    parts = [p3_box_kt(2)] * ((n - base) // 6)
    parts += [complete(4)] * k4s
    parts += [k5_minus_e()] * k5es
    return disjoint_union(parts)


def five_sat_edge_constant(residue: int) -> int:
    """c in |E| = (7n + c)/6 for five_sat_mix; c(5) is 19 by direct count."""
    return (0, 35, 16, 27, 8, 19)[residue % 6]
