import random

import pytest

from conftest import all_witnesses, rand_connected
from pathcontract.errors import CapacityExceeded, Disconnected, NotConnected
from pathcontract.graph import (
    Graph,
    complete_graph,
    path_graph,
    star_graph,
    verify_witness,
)
from pathcontract.oracle import (
    connected_graphs,
    oracle_dcs,
    oracle_nice_solution,
    oracle_path_contraction,
)


def test_path_contraction_families():
    for n in range(1, 9):
        t, w = oracle_path_contraction(path_graph(n))
        assert t == n and verify_witness(path_graph(n), w)
    for n in range(2, 7):
        assert oracle_path_contraction(complete_graph(n))[0] == 2
    assert oracle_path_contraction(star_graph(3))[0] == 3


def test_path_contraction_requires_connected():
    with pytest.raises(Disconnected):
        oracle_path_contraction(Graph(2, (0, 0)))


def test_witness_always_verifies_and_t_at_least_2():
    rng = random.Random(79)
    for _ in range(20):
        g = rand_connected(rng.randrange(2, 10), rng.uniform(0.1, 0.8), rng)
        t, w = oracle_path_contraction(g)
        assert t >= 2
        assert verify_witness(g, w) and w.t == t


def test_relabeling_invariance():
    rng = random.Random(83)
    for _ in range(10):
        n = rng.randrange(2, 9)
        g = rand_connected(n, rng.uniform(0.2, 0.7), rng)
        perm = list(range(n))
        rng.shuffle(perm)
        adj = [0] * n
        for u in range(n):
            for v in range(n):
                if g.adj[u] >> v & 1:
                    adj[perm[u]] |= 1 << perm[v]
        assert (
            oracle_path_contraction(Graph(n, adj))[0]
            == oracle_path_contraction(g)[0]
        )


def test_singleton_end_bags_do_not_lose_optimality():
    rng = random.Random(89)
    for _ in range(12):
        g = rand_connected(rng.randrange(3, 8), rng.uniform(0.2, 0.7), rng)
        t, _ = oracle_path_contraction(g)
        if t < 3:
            continue
        restricted = max(
            (
                w.t
                for w in all_witnesses(g)
                if w.parts[0].bit_count() == 1 and w.parts[-1].bit_count() == 1
            ),
            default=0,
        )
        assert restricted == t


def test_nice_solution_examples():
    g = path_graph(4)
    assert oracle_nice_solution(g, 0b1111) == 4
    assert oracle_nice_solution(g, 0b0001) == 1
    assert oracle_nice_solution(g, 0b0110) == 1
    with pytest.raises(NotConnected):
        oracle_nice_solution(g, 0b0101)


def test_oracle_dcs_examples():
    assert oracle_dcs(path_graph(3), 0b001, 0b100, 2)
    assert not oracle_dcs(complete_graph(3), 0b001, 0b010, 3)
    assert oracle_dcs(path_graph(5), 0b00001, 0b10000, 3)


def test_connected_graph_counts():
    assert sum(1 for _ in connected_graphs(2)) == 1
    assert sum(1 for _ in connected_graphs(3)) == 4
    assert sum(1 for _ in connected_graphs(4)) == 38
    assert sum(1 for _ in connected_graphs(5)) == 728
    with pytest.raises(CapacityExceeded):
        next(connected_graphs(8))
    with pytest.raises(CapacityExceeded):
        next(connected_graphs(1))
