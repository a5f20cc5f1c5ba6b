import random
import re

import pytest

from pathcontract.graph import Graph, WitnessStructure, mask_union


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run the multi-hour exhaustive sweeps",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per numbered acceptance criterion."""
    seen = {}
    for status in ("passed", "skipped", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            m = re.search(r"test_criterion_(\d+)", getattr(rep, "nodeid", ""))
            if m:
                seen.setdefault(int(m.group(1)), set()).add(status)
    if not seen:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(seen):
        statuses = seen[num]
        if "failed" in statuses or "error" in statuses:
            verdict = "FAIL"
        elif "passed" in statuses:
            # a skipped slow variant does not demote a passing criterion
            verdict = "PASS"
        else:
            verdict = "SKIPPED"
        terminalreporter.write_line(f"criterion {num}: {verdict}")


def rand_connected(n, p, rng: random.Random) -> Graph:
    """Random connected graph: random spanning tree plus G(n, p) edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


def all_witnesses(g: Graph):
    """Every ordered witness structure of g, via the coloring bijection.

    Each structure is produced from the coloring given by its odd bags;
    both orientations of each quotient path are yielded.
    """
    for half in range(1 << (g.n - 1)):
        s = (half << 1) | 1
        parts = g.coloring_path_parts(s)
        if parts is None:
            continue
        yield WitnessStructure(tuple(parts))
        if len(parts) > 1:
            yield WitnessStructure(tuple(reversed(parts)))


def os_es(w: WitnessStructure):
    return w.odd_union(), w.even_union()


def soepc_shape(g, w, beta):
    osum, esum = os_es(w)
    half = beta * g.n / 2
    return osum.bit_count() <= half or esum.bit_count() <= half


def bpc_shape(g, w, alpha):
    if w.t < 2:
        return False
    cap = alpha * g.n
    for i in range(1, w.t):
        left = mask_union(w.parts[:i])
        right = mask_union(w.parts[i:])
        if (
            g.closed_neighborhood(left).bit_count() <= cap
            and g.closed_neighborhood(right).bit_count() <= cap
        ):
            return True
    return False


def tdcpc_shape(g, w, gamma):
    # heavy adjacent pair with non-empty flanks on both sides, matching
    # the two-table-plus-2-DCS decomposition
    cap = (1 - gamma / 2) * g.n
    for i in range(1, w.t - 2):
        pair = w.parts[i] | w.parts[i + 1]
        if pair.bit_count() < gamma * g.n:
            continue
        left = mask_union(w.parts[:i])
        right = mask_union(w.parts[i + 2 :])
        if (
            g.closed_neighborhood(left).bit_count() <= cap
            and g.closed_neighborhood(right).bit_count() <= cap
        ):
            return True
    return False


def nsoepc_shape(g, w, eps):
    if w.t < 3:
        return False
    osum, esum = os_es(w)
    cap = eps * g.n
    for i in range(2, w.t):
        side = osum if i % 2 == 1 else esum
        if (side & ~w.parts[i - 1]).bit_count() <= cap:
            return True
    return False


def shape_optimum(g, predicate, param, floor):
    best = floor
    for w in all_witnesses(g):
        if w.t > best and predicate(g, w, param):
            best = w.t
    return best
