"""Enumeration of connected vertex sets under neighborhood budgets.

All enumerations use recursive frontier branching: grow a connected set one
neighbor at a time, banning each tried vertex for the sibling branches so
every set is produced exactly once, and prune whole branches as soon as a
monotone budget (closed-neighborhood size) is exceeded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DomainError
from .graph import Graph, bits, compress_mask, expand_mask, mask_of


def g_of(mu):
    """g(mu) = 1 / (mu^mu * (1-mu)^(1-mu)), the binomial-entropy base.

    Used only for reporting and budget estimates, never for solver
    decisions.
    """
    mu = float(mu)
    if not 0.0 < mu < 1.0:
        raise DomainError(f"g is defined on (0, 1), got {mu}")
    return math.exp(-(mu * math.log(mu) + (1.0 - mu) * math.log1p(-mu)))


def enumerate_subsets_at_most(universe, mu):
    """Stream every subset of ``universe`` (incl. the empty set) of size at
    most mu * |universe|, using the exact rational threshold."""
    members = list(bits(universe))
    cap = int(Fraction(mu) * len(members))
    for size in range(min(cap, len(members)) + 1):
        for combo in combinations(members, size):
            yield mask_of(combo)


@dataclass(frozen=True)
class ExtenderQuery:
    """Request for connected extender sets of a base set S.

    Asks for the sets A disjoint from S with G-S[A] connected, N(S) a subset
    of A, |A| = a, and exactly b neighbors of A inside G-S.
    """

    base: int
    a: int
    b: int


def _grow(nb, cur, banned, limit, out):
    # every visited node is connected; prune on the monotone budget |N[cur]|
    if (cur | nb(cur)).bit_count() > limit:
        return
    out.append(cur)
    ext = nb(cur) & ~banned
    for v in bits(ext):
        _grow(nb, cur | (1 << v), banned, limit, out)
        banned |= 1 << v


def enumerate_small_connected(g: Graph, rho) -> list:
    """Non-empty connected sets S with |N[S]| <= rho * n, ascending by size
    (ties by mask encoding)."""
    limit = int(Fraction(rho) * g.n)
    out = []
    for v in range(g.n):
        # banning smaller vertices makes v the minimum member of its branch
        _grow(g.neighborhood, 1 << v, (1 << v) - 1, limit, out)
    out.sort(key=lambda s: (s.bit_count(), s))
    return out


def _grow_extenders(h, q, cur, banned, prune, emit):
    # cur stays connected in H; the final set must still absorb q \ cur,
    # and N_H[final] contains N_H[cur] | q, so both prunes are monotone
    if prune(cur, (cur | h.neighborhood(cur)) | q):
        return
    if q & ~cur == 0:
        emit(cur)
    ext = h.neighborhood(cur) & ~banned
    for v in bits(ext):
        _grow_extenders(h, q, cur | (1 << v), banned, prune, emit)
        banned |= 1 << v


def enumerate_extenders(g: Graph, query: ExtenderQuery) -> list:
    """All extender sets matching the query exactly (see ExtenderQuery)."""
    s, a, b = query.base, query.a, query.b
    q = g.neighborhood(s)
    if q == 0:
        return []
    h, labels = g.induced(g.full & ~s)
    qh = compress_mask(q, labels)
    seed = qh & -qh

    def prune(cur, reach):
        return (cur | qh).bit_count() > a or reach.bit_count() > a + b

    out = []

    def emit(cur):
        if cur.bit_count() == a and h.neighborhood(cur).bit_count() == b:
            out.append(cur)

    _grow_extenders(h, qh, seed, 0, prune, emit)
    return [expand_mask(m, labels) for m in out]


def iter_extenders_within(g: Graph, s, limit):
    """Yield (extender, external-degree) pairs for the base set ``s``.

    Covers every connected extender A of s whose combined footprint
    |s| + |A| + |N_{G-s}(A)| stays within ``limit`` vertices; this is the
    bulk form the table builder consumes (one traversal per s instead of
    one per (a, b) pair).
    """
    q = g.neighborhood(s)
    if q == 0:
        return
    base = s.bit_count()
    h, labels = g.induced(g.full & ~s)
    qh = compress_mask(q, labels)
    seed = qh & -qh
    budget = limit - base

    def prune(cur, reach):
        return reach.bit_count() > budget

    found = []

    def emit(cur):
        bsize = h.neighborhood(cur).bit_count()
        if cur.bit_count() + bsize <= budget:
            found.append((cur, bsize))

    _grow_extenders(h, qh, seed, 0, prune, emit)
    for cur, bsize in found:
        yield expand_mask(cur, labels), bsize
