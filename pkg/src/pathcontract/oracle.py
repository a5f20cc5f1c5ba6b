"""Brute-force referees for the solver modules.

Everything here is deliberately simple and independent: only the graph
core is shared with the optimized code paths, so these functions can
referee them.  The path contraction referee walks all 2-colorings;
every witness structure is recoverable from the coloring given by its
odd bags, so colorings cover the whole search space at half the cost of
ordered partitions.
"""

from __future__ import annotations

from .errors import (
    CapacityExceeded,
    Disconnected,
    NotConnected,
    TerminalsOverlap,
)
from .graph import Graph, WitnessStructure, bits


def oracle_path_contraction(g: Graph):
    """(t, witness) by exhausting all two-colorings of the vertices."""
    if not g.is_connected():
        raise Disconnected("input graph must be connected")
    best = 1
    best_parts = [g.full]
    # vertex 0's color can be fixed: complementary colorings contract alike
    for half in range(1 << (g.n - 1)):
        s = (half << 1) | 1
        parts = g.coloring_path_parts(s)
        if parts is not None and len(parts) > best:
            best = len(parts)
            best_parts = parts
    return best, WitnessStructure(tuple(best_parts))


def oracle_nice_solution(g: Graph, s) -> int:
    """Largest q over ordered connected partitions of s that form a path
    quotient with the whole boundary of s inside an end part."""
    if s == 0 or not g.is_connected_set(s):
        raise NotConnected("nice solutions are defined on connected sets")
    boundary = g.boundary(s)
    h, labels = g.induced(s)
    anchor = 0
    for i, v in enumerate(labels):
        if boundary >> v & 1:
            anchor |= 1 << i
    best = 1
    for half in range(1 << (h.n - 1)):
        color = (half << 1) | 1
        parts = h.coloring_path_parts(color)
        if parts is None or len(parts) <= best:
            continue
        # the boundary must sit inside the first or last part
        if anchor & ~parts[0] == 0 or anchor & ~parts[-1] == 0:
            best = len(parts)
    return best


def _subsets_of(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def oracle_dcs(g: Graph, z1, z2, parts: int) -> bool:
    """Exhaustive yes/no for the 2- or 3-disjoint-connected-subgraphs boxes."""
    if z1 & z2:
        raise TerminalsOverlap("terminal sets intersect")
    if parts == 2:
        free = g.full & ~(z1 | z2)
        for extra in _subsets_of(free):
            v1 = z1 | extra
            v2 = g.full & ~v1
            if v1 and v2 and g.is_connected_set(v1) and g.is_connected_set(v2):
                return True
        return False
    if parts == 3:
        free = g.full & ~(z1 | z2)
        for u in _subsets_of(free):
            if u == 0 or not g.is_connected_set(u):
                continue
            comps = g.components(g.full & ~u)
            if len(comps) != 2:
                continue
            a, b = comps
            if (z1 & ~a == 0 and z2 & ~b == 0) or (z1 & ~b == 0 and z2 & ~a == 0):
                return True
        return False
    raise ValueError("parts must be 2 or 3")


def connected_graphs(n: int):
    """All labeled connected simple graphs on n vertices, 2 <= n <= 7."""
    if not 2 <= n <= 7:
        raise CapacityExceeded("generator supports 2 <= n <= 7")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for pick in range(1 << len(pairs)):
        adj = [0] * n
        for i in bits(pick):
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        g = Graph(n, adj)
        if g.is_connected():
            yield g
