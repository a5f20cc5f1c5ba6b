import itertools
import random

import pytest

from conftest import rand_connected
from pathcontract.dcs import (
    TriPartition,
    enumerate_minimal_connectors,
    is_immovable,
    make_immovable,
    p5_contract,
    solve_2dcs,
    solve_3dcs,
    solve_small_3dcs,
    tri_violation,
)
from pathcontract.errors import EmptyTerminal, InvalidSolution, TerminalsOverlap
from pathcontract.graph import (
    complete_graph,
    cycle_graph,
    mask_of,
    path_graph,
    star_graph,
)
from pathcontract.oracle import oracle_dcs


def test_2dcs_examples():
    g = path_graph(3)
    sol = solve_2dcs(g, 0b001, 0b100)
    assert sol is not None and sol.v1 | sol.v2 == g.full and sol.v1 & sol.v2 == 0
    assert solve_2dcs(g, 0b101, 0b010) is None
    tri = complete_graph(3)
    sol = solve_2dcs(tri, 0b001, 0b010)
    assert sol is not None and sol.v1 & 0b001 and sol.v2 & 0b010


def test_2dcs_terminal_validation():
    g = path_graph(3)
    with pytest.raises(TerminalsOverlap):
        solve_2dcs(g, 0b011, 0b010)
    with pytest.raises(EmptyTerminal):
        solve_2dcs(g, 0, 0b010)


def test_minimal_connectors_examples():
    g = path_graph(4)
    assert enumerate_minimal_connectors(g, 0b1001) == [0b1111]
    star = star_graph(3)
    assert enumerate_minimal_connectors(star, 0b0110) == [0b0111]
    assert enumerate_minimal_connectors(g, 0b0010) == [0b0010]


def brute_minimal_connectors(g, z):
    conns = {
        s
        for s in range(1, 1 << g.n)
        if z & ~s == 0 and g.is_connected_set(s)
    }
    return {s for s in conns if not any(t != s and t & ~s == 0 for t in conns)}


def test_minimal_connectors_match_brute_force():
    rng = random.Random(41)
    for _ in range(20):
        n = rng.randrange(2, 9)
        g = rand_connected(n, rng.uniform(0.15, 0.7), rng)
        z = 0
        for _ in range(rng.randrange(1, 4)):
            z |= 1 << rng.randrange(n)
        got = enumerate_minimal_connectors(g, z)
        assert len(got) == len(set(got))
        assert set(got) == brute_minimal_connectors(g, z)


def test_3dcs_examples():
    g = path_graph(5)
    sol = solve_3dcs(g, 0b00001, 0b10000)
    assert sol is not None and tri_violation(g, sol) is None
    star = star_graph(3)
    sol = solve_3dcs(star, 0b0010, 0b0100)
    assert sol == TriPartition(v1=0b0010, u=0b1001, v2=0b0100)
    assert solve_3dcs(complete_graph(4), 0b0001, 0b0010) is None


def test_small_3dcs_pipeline():
    g = path_graph(5)
    sol = solve_small_3dcs(g, 0b00001, 0b10000)
    assert sol is not None and tri_violation(g, sol) is None
    assert solve_small_3dcs(complete_graph(3), 0b001, 0b010) is None
    # adjacent terminals are rejected up front
    assert solve_small_3dcs(path_graph(3), 0b001, 0b010) is None


def test_3dcs_empty_terminals_guess():
    assert solve_3dcs(path_graph(5), 0, 0) is not None
    assert solve_3dcs(star_graph(3), 0, 0) is not None
    assert solve_3dcs(complete_graph(4), 0, 0) is None
    assert solve_3dcs(cycle_graph(5), 0, 0) is None


def test_immovable_examples():
    g = path_graph(5)
    sol = TriPartition(v1=0b00011, u=0b00100, v2=0b11000)
    z1, z2 = 0b00001, 0b10000
    assert not is_immovable(g, sol, z1, z2)
    fixed = make_immovable(g, sol, z1, z2)
    assert fixed == TriPartition(v1=0b00001, u=0b01110, v2=0b10000)
    assert is_immovable(g, fixed, z1, z2)
    tight = TriPartition(v1=0b001, u=0b010, v2=0b100)
    assert make_immovable(path_graph(3), tight, 0b001, 0b100) == tight


def test_immovable_rejects_invalid():
    g = path_graph(5)
    bad = TriPartition(v1=0b00011, u=0b00100, v2=0b11000)
    with pytest.raises(InvalidSolution):
        is_immovable(g, bad, 0b00010, 0b00100)


def test_p5_examples():
    assert p5_contract(path_graph(5))
    assert p5_contract(path_graph(7))
    assert not p5_contract(complete_graph(4))
    assert not p5_contract(star_graph(3))
    assert not p5_contract(cycle_graph(6))


def _terminal_pairs(n, max_size=2):
    singles = [
        mask_of(c)
        for size in (1, 2)
        for c in itertools.combinations(range(n), size)
    ]
    for z1 in singles:
        for z2 in singles:
            if z1 & z2 == 0:
                yield z1, z2


def test_dcs_verdicts_match_oracle_on_random_graphs():
    rng = random.Random(47)
    for _ in range(15):
        n = rng.randrange(3, 8)
        g = rand_connected(n, rng.uniform(0.2, 0.7), rng)
        for z1, z2 in _terminal_pairs(n):
            got2 = solve_2dcs(g, z1, z2)
            assert (got2 is not None) == oracle_dcs(g, z1, z2, 2)
            got3 = solve_3dcs(g, z1, z2)
            assert (got3 is not None) == oracle_dcs(g, z1, z2, 3)
            if got3 is not None:
                assert tri_violation(g, got3) is None
                assert z1 & ~got3.v1 == 0 and z2 & ~got3.v2 == 0
