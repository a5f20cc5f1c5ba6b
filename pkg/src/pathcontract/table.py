"""Dynamic program over small connected sets.

For every connected set S whose closed neighborhood fits in rho * n
vertices, the table stores the largest q such that G[S] splits into an
ordered partition (W_1, ..., W_q) of connected parts with consecutive-only
adjacency and the whole boundary of S inside the last part W_q.  Entries
are filled in ascending size order; each transition appends one connected
extender A covering N(S) as the new last part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .connsets import enumerate_small_connected, iter_extenders_within
from .errors import KeyAbsent
from .graph import Graph, WitnessStructure


@dataclass
class GammaTable:
    """Best last-part-anchored path lengths for all rho-small connected sets."""

    rho: Fraction
    value: dict
    pred: dict

    def gamma(self, s):
        try:
            return self.value[s]
        except KeyError:
            raise KeyAbsent(f"set {s:#x} is not rho-small connected") from None

    def __contains__(self, s):
        return s in self.value

    def keys(self):
        return self.value.keys()


def compute_gamma(g: Graph, rho) -> GammaTable:
    """Fill the table bottom-up, smallest sets first.

    A set S extends to S | A whenever A covers N(S), is connected in G - S,
    and |S| + |A| + |N(S | A)| still fits the budget; then the new set is
    itself a key and its value is at least gamma(S) + 1.
    """
    rho = Fraction(rho)
    limit = int(rho * g.n)
    keys = enumerate_small_connected(g, rho)
    value = {s: 1 for s in keys}
    pred = {}
    for s in keys:
        base = value[s]
        for a_mask, _b in iter_extenders_within(g, s, limit):
            grown = s | a_mask
            # grown is a key: connected (A covers N(S)) and budget-checked
            if value[grown] < base + 1:
                value[grown] = base + 1
                pred[grown] = a_mask
    return GammaTable(rho=rho, value=value, pred=pred)


def reconstruct(g: Graph, table: GammaTable, s) -> WitnessStructure:
    """Walk the predecessor chain of s back to a single part.

    The result partitions s into gamma(s) parts with the boundary of s in
    the last one.
    """
    table.gamma(s)
    parts = []
    cur = s
    while cur in table.pred:
        a = table.pred[cur]
        parts.append(a)
        cur &= ~a
    parts.append(cur)
    parts.reverse()
    return WitnessStructure(tuple(parts))
