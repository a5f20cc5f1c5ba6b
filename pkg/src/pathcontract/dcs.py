"""Disjoint connected subgraph solvers.

2-DCS: split V into two connected halves separating the terminal sets.
3-DCS: split V into (V1, U, V2), all connected, with U separating V1 from
V2 and the terminal sets on opposite sides.  Small terminal sets route
through a minimal-connector enumeration; large ones fall back to direct
separator enumeration.  The P5 front-end reduces path contraction to
3-DCS on the graph minus two guessed path ends.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EmptyTerminal,
    InvalidSolution,
    TerminalsOverlap,
)
from .graph import Graph, bits, compress_mask, expand_mask

DELTA_NUM = 92
DELTA_DEN = 1000


@dataclass(frozen=True)
class Bipartition:
    """Partition of V into two connected non-empty halves."""

    v1: int
    v2: int


@dataclass(frozen=True)
class TriPartition:
    """Partition (v1, u, v2): all parts connected and non-empty, and G - u
    has exactly the two components G[v1] and G[v2]."""

    v1: int
    u: int
    v2: int


def tri_violation(g: Graph, sol: TriPartition):
    """Reason the tri-partition is invalid for g, or None."""
    v1, u, v2 = sol.v1, sol.u, sol.v2
    if not (v1 and u and v2):
        return "empty-part"
    if v1 & u or v1 & v2 or u & v2 or (v1 | u | v2) != g.full:
        return "not-a-partition"
    for p in (v1, u, v2):
        if not g.is_connected_set(p):
            return "part-not-connected"
    if g.components(g.full & ~u) != sorted((v1, v2), key=lambda m: m & -m):
        return "separator-leaves-wrong-components"
    return None


def check_tri(g: Graph, sol: TriPartition, z1, z2):
    reason = tri_violation(g, sol)
    if reason is None and (z1 & ~sol.v1 or z2 & ~sol.v2):
        reason = "terminals-on-wrong-side"
    if reason is not None:
        raise InvalidSolution(reason)


def _check_terminals(z1, z2):
    if z1 & z2:
        raise TerminalsOverlap("terminal sets intersect")
    if not z1 or not z2:
        raise EmptyTerminal("terminal sets must be non-empty")


def _connected_supersets(g: Graph, seed, banned):
    """All connected sets containing the seed vertex set bit and avoiding
    banned vertices, each exactly once."""
    yield seed
    ext = g.neighborhood(seed) & ~banned
    for v in bits(ext):
        yield from _connected_supersets(g, seed | (1 << v), banned)
        banned |= 1 << v


def solve_2dcs(g: Graph, z1, z2):
    """Connected bipartition separating z1 from z2, or None."""
    _check_terminals(z1, z2)
    seed = z1 & -z1
    for cand in _connected_supersets(g, seed, z2):
        if z1 & ~cand:
            continue
        if g.is_connected_set(g.full & ~cand):
            return Bipartition(v1=cand, v2=g.full & ~cand)
    return None


def enumerate_minimal_connectors(g: Graph, z):
    """Minimal connected supersets of z.

    Minimality by single-vertex removal: S is minimal iff dropping any
    non-terminal vertex disconnects it, which for connectors coincides
    with subset-minimality.
    """
    if not z:
        raise EmptyTerminal("connector terminal set must be non-empty")
    seed = z & -z
    out = []
    for cand in _connected_supersets(g, seed, 0):
        if z & ~cand:
            continue
        if all(
            not g.is_connected_set(cand & ~(1 << v)) for v in bits(cand & ~z)
        ):
            out.append(cand)
    return out


def _zi_separator(g: Graph, part, v, zi):
    """Does removing v from G[part] leave zi split across components?"""
    rest = part & ~(1 << v)
    return not any(zi & ~c == 0 for c in g.components(rest))


def is_immovable(g: Graph, sol: TriPartition, z1, z2) -> bool:
    """True iff every non-terminal part vertex on the separator boundary is
    needed to keep its side's terminals connected."""
    check_tri(g, sol, z1, z2)
    nb_u = g.neighborhood(sol.u)
    for part, zi in ((sol.v1, z1), (sol.v2, z2)):
        for v in bits(part & ~zi & nb_u):
            if not _zi_separator(g, part, v, zi):
                return False
    return True


def make_immovable(g: Graph, sol: TriPartition, z1, z2) -> TriPartition:
    """Migrate movable boundary vertices (and the side components they
    detach) into u until the solution is immovable."""
    check_tri(g, sol, z1, z2)
    while True:
        nb_u = g.neighborhood(sol.u)
        moved = False
        for side, (part, zi) in enumerate(((sol.v1, z1), (sol.v2, z2))):
            for v in bits(part & ~zi & nb_u):
                if _zi_separator(g, part, v, zi):
                    continue
                keep = 0
                for c in g.components(part & ~(1 << v)):
                    if zi & ~c == 0:
                        keep = c
                grow = part & ~keep
                if side == 0:
                    sol = TriPartition(v1=keep, u=sol.u | grow, v2=sol.v2)
                else:
                    sol = TriPartition(v1=sol.v1, u=sol.u | grow, v2=keep)
                moved = True
                break
            if moved:
                break
        if not moved:
            check_tri(g, sol, z1, z2)
            return sol


def solve_small_3dcs(g: Graph, z1, z2):
    """3-DCS via minimal-connector enumeration (intended for small z1|z2).

    Adds a virtual edge between one vertex of each terminal set, lists the
    minimal (z1|z2)-connectors of the augmented graph, keeps those whose
    induced subgraph splits into exactly a z1-side and a z2-side, and
    accepts when exactly one outside component touches both sides.
    """
    _check_terminals(z1, z2)
    if g.neighborhood(z1) & z2:
        return None
    t1 = (z1 & -z1).bit_length() - 1
    t2 = (z2 & -z2).bit_length() - 1
    aug = list(g.adj)
    aug[t1] |= 1 << t2
    aug[t2] |= 1 << t1
    gp = Graph(g.n, aug)
    z = z1 | z2
    for s in enumerate_minimal_connectors(gp, z):
        comps = g.components(s)
        if len(comps) != 2:
            continue
        s1 = next((c for c in comps if z1 & ~c == 0 and not (c & z2)), 0)
        s2 = next((c for c in comps if z2 & ~c == 0 and not (c & z1)), 0)
        if not s1 or not s2:
            continue
        side1, side2, both = s1, s2, []
        for c in g.components(g.full & ~s):
            nb = g.neighborhood(c)
            hits1, hits2 = bool(nb & s1), bool(nb & s2)
            if hits1 and hits2:
                both.append(c)
            elif hits1:
                side1 |= c
            else:
                side2 |= c
        if len(both) != 1:
            continue
        sol = TriPartition(v1=side1, u=both[0], v2=side2)
        check_tri(g, sol, z1, z2)
        return sol
    return None


def solve_3dcs(g: Graph, z1, z2):
    """3-DCS with optional empty terminal sets (resolved by guessing)."""
    if z1 & z2:
        raise TerminalsOverlap("terminal sets intersect")
    if not z1 or not z2:
        # guess one vertex for an empty side; recursion fills the other
        for v in bits(g.full & ~(z1 | z2)):
            if z1:
                sol = solve_3dcs(g, z1, 1 << v)
            else:
                sol = solve_3dcs(g, 1 << v, z2)
            if sol is not None:
                return sol
        return None
    if (z1 | z2).bit_count() * DELTA_DEN <= DELTA_NUM * g.n:
        return solve_small_3dcs(g, z1, z2)
    free = g.full & ~(z1 | z2)
    for v in bits(free):
        banned = ~free | ((1 << v) - 1)
        for u in _connected_supersets(g, 1 << v, banned & g.full):
            comps = g.components(g.full & ~u)
            if len(comps) != 2:
                continue
            a, b = comps
            if z1 & ~a == 0 and z2 & ~b == 0:
                sol = TriPartition(v1=a, u=u, v2=b)
            elif z2 & ~a == 0 and z1 & ~b == 0:
                sol = TriPartition(v1=b, u=u, v2=a)
            else:
                continue
            check_tri(g, sol, z1, z2)
            return sol
    return None


def p5_contract(g: Graph) -> bool:
    """Is g contractible to the 5-vertex path?

    Guess the two singleton end bags x, y; the middle three bags then form
    a 3-DCS solution of g - {x, y} with terminals N(x), N(y).
    """
    if g.n < 5:
        return False
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.adj[x] >> y & 1:
                continue
            if g.adj[x] & g.adj[y]:
                continue
            rest = g.full & ~(1 << x) & ~(1 << y)
            if not g.is_connected_set(rest):
                continue
            h, labels = g.induced(rest)
            sol = solve_3dcs(
                h,
                compress_mask(g.adj[x], labels),
                compress_mask(g.adj[y], labels),
            )
            if sol is not None:
                return True
    return False


def tri_to_witness_parts(sol: TriPartition):
    return (sol.v1, sol.u, sol.v2)


def expand_tri(sol: TriPartition, labels):
    """Relabel a tri-partition of an induced subgraph back to the host."""
    return TriPartition(
        v1=expand_mask(sol.v1, labels),
        u=expand_mask(sol.u, labels),
        v2=expand_mask(sol.v2, labels),
    )
