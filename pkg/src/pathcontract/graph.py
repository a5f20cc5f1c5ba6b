"""Graph representation, vertex-set helpers, quotients, and witness checking.

Vertices are 0..n-1 and every vertex set is an ``int`` bitmask, so a set's
encoding doubles as its hash key.  Capacity is fixed at 128 vertices; the
exponential solvers are hopeless far below that anyway.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CapacityExceeded,
    NotAPartition,
    ParseError,
    PartNotConnected,
)
from .kernels import CAPACITY, BitKernel


def bits(mask):
    """Yield the members of a bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    """Bitmask with the given vertices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def compress_mask(mask, labels):
    """Re-encode ``mask`` (over original labels) into induced-subgraph bits."""
    out = 0
    for i, v in enumerate(labels):
        if mask >> v & 1:
            out |= 1 << i
    return out


def expand_mask(mask, labels):
    """Inverse of :func:`compress_mask`."""
    out = 0
    for i in bits(mask):
        out |= 1 << labels[i]
    return out


class Graph:
    """Simple undirected graph with bitmask adjacency.

    Immutable after construction; all operations are pure.
    """

    __slots__ = ("n", "adj", "full", "_k")

    def __init__(self, n, adj):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        if n > CAPACITY:
            raise CapacityExceeded(f"at most {CAPACITY} vertices supported, got {n}")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError("adjacency length does not match n")
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full:
                raise ValueError(f"neighbor of {v} out of range")
            if m >> v & 1:
                raise ValueError(f"self-loop at {v}")
        for v, m in enumerate(adj):
            for u in bits(m):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric for edge {v}-{u}")
        self.n = n
        self.adj = adj
        self.full = full
        self._k = BitKernel(n, adj)

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def edges(self):
        for v in range(self.n):
            for u in bits(self.adj[v] >> v):
                yield v, u + v

    def edge_count(self):
        return sum(m.bit_count() for m in self.adj) // 2

    # -- set operations ----------------------------------------------------

    def neighborhood(self, s):
        """N(s): vertices outside s with a neighbor in s."""
        return self._k.neighborhood(s)

    def closed_neighborhood(self, s):
        """N[s] = s together with N(s)."""
        return s | self._k.neighborhood(s)

    def boundary(self, s):
        """Members of s that have a neighbor outside s."""
        return self._k.neighborhood(self.full & ~s) & s

    def components(self, s):
        """Components of G[s], ascending by minimum member."""
        return self._k.components(s)

    def is_connected_set(self, s):
        """True iff G[s] is connected; vacuously true for the empty set."""
        return self._k.is_connected(s)

    def is_connected(self):
        return self._k.is_connected(self.full)

    def coloring_path_parts(self, s):
        """Contract each component of G[s] and G - s; return the parts in
        path order if the result is a path, else None."""
        return self._k.quotient_path_parts(s)

    # -- structural operations --------------------------------------------

    def quotient(self, parts):
        """Contract each part to a single vertex and return the result.

        Vertex i of the quotient corresponds to ``parts[i]``.  Raises
        NotAPartition / PartNotConnected on bad input.
        """
        parts = list(parts)
        seen = 0
        for p in parts:
            if p == 0 or p & seen or p & ~self.full:
                raise NotAPartition("parts must be non-empty, disjoint subsets of V")
            seen |= p
        if seen != self.full:
            raise NotAPartition("parts do not cover every vertex")
        for i, p in enumerate(parts):
            if not self._k.is_connected(p):
                raise PartNotConnected(i, p)
        k = len(parts)
        adj = [0] * k
        for i, p in enumerate(parts):
            nb = self._k.neighborhood(p)
            for j in range(k):
                if j != i and nb & parts[j]:
                    adj[i] |= 1 << j
        return Graph(k, adj)

    def as_path_length(self):
        """t when this graph is the t-vertex path, else None."""
        order = self.path_order()
        return None if order is None else len(order)

    def path_order(self):
        """Vertices in path order when the graph is a path, else None."""
        if self.n == 1:
            return [0]
        ends = []
        for v in range(self.n):
            d = self.adj[v].bit_count()
            if d == 1:
                ends.append(v)
            elif d != 2:
                return None
        if len(ends) != 2:
            return None
        order = [ends[0]]
        prev = -1
        cur = ends[0]
        for _ in range(self.n - 1):
            nxt = self.adj[cur] & ~(1 << prev if prev >= 0 else 0)
            if nxt.bit_count() != 1:
                return None
            prev, cur = cur, nxt.bit_length() - 1
            order.append(cur)
        if len(set(order)) != self.n:
            return None
        return order

    def induced(self, s):
        """Subgraph induced by s, relabeled to 0..|s|-1.

        Returns (subgraph, labels) where labels[i] is the original vertex
        behind the subgraph's vertex i.
        """
        labels = list(bits(s))
        index = {v: i for i, v in enumerate(labels)}
        adj = []
        for v in labels:
            m = 0
            for u in bits(self.adj[v] & s):
                m |= 1 << index[u]
            adj.append(m)
        return Graph(len(labels), adj), labels


@dataclass(frozen=True)
class WitnessStructure:
    """Ordered partition (W_1, ..., W_t) certifying contraction to P_t."""

    parts: tuple

    @property
    def t(self):
        return len(self.parts)

    def odd_union(self):
        return mask_union(self.parts[0::2])

    def even_union(self):
        return mask_union(self.parts[1::2])

    def reversed(self):
        return WitnessStructure(tuple(reversed(self.parts)))

    def to_lists(self):
        return [list(bits(p)) for p in self.parts]


def mask_union(masks):
    out = 0
    for m in masks:
        out |= m
    return out


def witness_violation(g, w):
    """Reason code for why ``w`` is not a valid witness of g, or None."""
    parts = w.parts if isinstance(w, WitnessStructure) else tuple(w)
    if not parts:
        return "empty-structure"
    seen = 0
    for p in parts:
        if p == 0:
            return "empty-part"
        if p & seen:
            return "parts-overlap"
        if p & ~g.full:
            return "part-out-of-range"
        seen |= p
    if seen != g.full:
        return "parts-missing-vertices"
    for p in parts:
        if not g.is_connected_set(p):
            return "part-not-connected"
    nbrs = [g.neighborhood(p) for p in parts]
    k = len(parts)
    for i in range(k):
        for j in range(i + 1, k):
            touching = bool(nbrs[i] & parts[j])
            if touching != (j == i + 1):
                return "adjacency-not-consecutive"
    return None


def verify_witness(g, w):
    """True iff ``w`` is a valid path witness structure of g."""
    return witness_violation(g, w) is None


def parse_graph(text):
    """Parse the ``n m`` / edge-list text format (see README).

    Lines starting with '#' are ignored; duplicate edges collapse;
    self-loops and out-of-range endpoints are rejected.
    """
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise ParseError("empty graph file")
    head = rows[0].split()
    if len(head) != 2:
        raise ParseError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"header must be 'n m', got {rows[0]!r}") from None
    if n < 1:
        raise ParseError("vertex count must be positive")
    if n > CAPACITY:
        raise ParseError(f"at most {CAPACITY} vertices supported, got {n}")
    if len(rows) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        cols = ln.split()
        if len(cols) != 2:
            raise ParseError(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(cols[0]), int(cols[1])
        except ValueError:
            raise ParseError(f"edge line must be 'u v', got {ln!r}") from None
        if u == v:
            raise ParseError(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge {u}-{v} out of range for n={n}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
