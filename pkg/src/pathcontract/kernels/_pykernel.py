"""Pure-Python kernel: set algebra and connectivity over int-encoded vertex sets.

A vertex set is a plain ``int`` bitmask (bit v set <=> vertex v is a member).
This module is the fallback twin of the compiled ``_ckernel`` extension and
must match it bit for bit; ``tests/test_kernels.py`` enforces that.
"""

CAPACITY = 128


class BitKernel:
    """Connectivity/neighborhood primitives for one fixed graph."""

    backend = "python"

    def __init__(self, n, adj):
        if n > CAPACITY:
            raise ValueError(f"kernel capacity is {CAPACITY} vertices, got {n}")
        self.n = n
        self.adj = list(adj)
        self.full = (1 << n) - 1

    def neighborhood(self, s):
        """Open neighborhood of the set ``s`` (members excluded)."""
        out = 0
        m = s
        adj = self.adj
        while m:
            low = m & -m
            out |= adj[low.bit_length() - 1]
            m ^= low
        return out & ~s

    def component(self, s, v):
        """Vertex set of the component of G[s] containing v (v must be in s)."""
        comp = 1 << v
        frontier = comp
        adj = self.adj
        while frontier:
            grown = 0
            m = frontier
            while m:
                low = m & -m
                grown |= adj[low.bit_length() - 1]
                m ^= low
            frontier = grown & s & ~comp
            comp |= frontier
        return comp

    def components(self, s):
        """Components of G[s], ascending by minimum member."""
        out = []
        rest = s
        while rest:
            low = rest & -rest
            c = self.component(rest, low.bit_length() - 1)
            out.append(c)
            rest &= ~c
        return out

    def is_connected(self, s):
        """True iff G[s] is connected (vacuously true for the empty set)."""
        if s == 0:
            return True
        low = s & -s
        return self.component(s, low.bit_length() - 1) == s

    def quotient_path_parts(self, s):
        """Contract each component of G[s] and of G - s to a point.

        Returns the component masks in path order when the contracted graph
        is a path (a single vertex counts as P_1), else None.
        """
        parts = self.components(s) + self.components(self.full & ~s)
        k = len(parts)
        if k <= 1:
            return parts
        # part adjacency; any degree above 2 rules the path out immediately
        nbrs = [self.neighborhood(p) for p in parts]
        links = []
        ends = []
        for i in range(k):
            ni = nbrs[i]
            touch = [j for j in range(k) if j != i and ni & parts[j]]
            if len(touch) > 2 or not touch:
                return None
            links.append(touch)
            if len(touch) == 1:
                ends.append(i)
        if len(ends) != 2:
            return None
        # walk from one endpoint; a detached cycle elsewhere shows up as a
        # short walk
        order = [ends[0]]
        prev = -1
        cur = ends[0]
        for _ in range(k - 1):
            nxt = [j for j in links[cur] if j != prev]
            if len(nxt) != 1:
                return None
            prev, cur = cur, nxt[0]
            order.append(cur)
        if len(set(order)) != k:
            return None
        return [parts[i] for i in order]
