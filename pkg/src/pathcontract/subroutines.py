"""The four path-contraction subroutines.

Each one searches a restricted shape of witness structure and returns the
best path length it can certify:

- soepc: small odd or even side; try every small 2-coloring directly.
- bpc: balanced split; glue two anchored table entries at a separator edge.
- tdcpc: one heavy adjacent bag pair; two table entries around a 2-DCS split.
- nsoepc: one heavy bag with small remainder; splice a 3-DCS solution into
  a quotient path.

Every improvement over the floor value is certified by an assembled
witness structure before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .connsets import enumerate_subsets_at_most
from .dcs import solve_2dcs, solve_3dcs
from .errors import InvalidSolution
from .graph import (
    Graph,
    WitnessStructure,
    compress_mask,
    expand_mask,
    verify_witness,
    witness_violation,
)
from .table import compute_gamma, reconstruct


@dataclass(frozen=True)
class SubroutineResult:
    t: int
    witness: WitnessStructure | None
    subroutine: str


def _certified(g, t, parts, name):
    w = WitnessStructure(tuple(parts))
    reason = witness_violation(g, w)
    if reason is not None or w.t != t:
        raise InvalidSolution(f"{name} produced a bad certificate: {reason}")
    return SubroutineResult(t=t, witness=w, subroutine=name)


def soepc(g: Graph, beta) -> SubroutineResult:
    """Best quotient path over colorings with one small color class."""
    best = 1
    best_parts = None
    for s in enumerate_subsets_at_most(g.full, Fraction(beta) / 2):
        parts = g.coloring_path_parts(s)
        if parts is not None and len(parts) > best:
            best = len(parts)
            best_parts = parts
    if best_parts is None:
        return SubroutineResult(t=1, witness=None, subroutine="soepc")
    return _certified(g, best, best_parts, "soepc")


def bpc(g: Graph, alpha) -> SubroutineResult:
    """Best sum of two anchored path lengths over balanced connected splits."""
    table = compute_gamma(g, alpha)
    best = 1
    best_pair = None
    for s in table.keys():
        comp = g.full & ~s
        if comp == 0 or s > comp or comp not in table:
            continue
        cand = table.gamma(s) + table.gamma(comp)
        if cand > best:
            best = cand
            best_pair = (s, comp)
    if best_pair is None:
        return SubroutineResult(t=1, witness=None, subroutine="bpc")
    s, comp = best_pair
    left = reconstruct(g, table, s).parts
    right = reconstruct(g, table, comp).parts
    # both halves end at their boundary part; glue them back to back
    return _certified(g, best, left + tuple(reversed(right)), "bpc")


def tdcpc(g: Graph, gamma) -> SubroutineResult:
    """Best structure whose two middle bags cover almost everything.

    Remove a small set with exactly two components, ask 2-DCS to split the
    rest between their neighborhoods, and charge the table on both sides.
    """
    gamma = Fraction(gamma)
    rho = 1 - gamma / 2
    table = compute_gamma(g, rho)
    nb_cap = int(rho * g.n)
    best = 2
    best_parts = None
    for s in enumerate_subsets_at_most(g.full, 1 - gamma):
        if s == 0:
            continue
        comps = g.components(s)
        if len(comps) != 2:
            continue
        s1, s2 = comps
        if (
            g.closed_neighborhood(s1).bit_count() > nb_cap
            or g.closed_neighborhood(s2).bit_count() > nb_cap
        ):
            continue
        cand = table.gamma(s1) + table.gamma(s2) + 2
        if cand <= best:
            continue
        z1, z2 = g.neighborhood(s1), g.neighborhood(s2)
        if z1 & z2:
            continue
        rest = g.full & ~s
        h, labels = g.induced(rest)
        bip = solve_2dcs(h, compress_mask(z1, labels), compress_mask(z2, labels))
        if bip is None:
            continue
        best = cand
        best_parts = (
            reconstruct(g, table, s1).parts
            + (expand_mask(bip.v1, labels), expand_mask(bip.v2, labels))
            + tuple(reversed(reconstruct(g, table, s2).parts))
        )
    if best_parts is None:
        return SubroutineResult(t=2, witness=None, subroutine="tdcpc")
    return _certified(g, best, best_parts, "tdcpc")


def nsoepc(g: Graph, eps) -> SubroutineResult:
    """Best structure with one bag so heavy that the rest of its color
    class is tiny.

    For each small color class the quotient must already be a path; one
    complement bag is then split into three by 3-DCS, stretching the path
    by two.
    """
    best = 2
    best_parts = None
    for s in enumerate_subsets_at_most(g.full, eps):
        if s == g.full:
            continue
        parts = g.coloring_path_parts(s)
        if parts is None or len(parts) + 2 <= best:
            continue
        k = len(parts)
        for i, cstar in enumerate(parts):
            if cstar & s:
                continue
            left = parts[i - 1] if i > 0 else 0
            right = parts[i + 1] if i + 1 < k else 0
            # when s is empty both flanks are missing and 3-DCS guesses
            # both terminals; that is how t = 3 structures are found
            z1 = g.neighborhood(left) & cstar if left else 0
            z2 = g.neighborhood(right) & cstar if right else 0
            if z1 & z2:
                continue
            h, labels = g.induced(cstar)
            sol = solve_3dcs(
                h, compress_mask(z1, labels), compress_mask(z2, labels)
            )
            if sol is None:
                continue
            best = k + 2
            best_parts = (
                parts[:i]
                + [
                    expand_mask(sol.v1, labels),
                    expand_mask(sol.u, labels),
                    expand_mask(sol.v2, labels),
                ]
                + parts[i + 1 :]
            )
            break
    if best_parts is None:
        return SubroutineResult(t=2, witness=None, subroutine="nsoepc")
    return _certified(g, best, best_parts, "nsoepc")
