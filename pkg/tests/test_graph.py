import pytest

from pathcontract.errors import (
    NotAPartition,
    ParseError,
    PartNotConnected,
)
from pathcontract.graph import (
    Graph,
    WitnessStructure,
    bits,
    complete_graph,
    compress_mask,
    cycle_graph,
    expand_mask,
    mask_of,
    parse_graph,
    path_graph,
    star_graph,
    verify_witness,
    witness_violation,
)


def test_mask_helpers_roundtrip():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert mask_of([1, 2, 4]) == 0b10110
    labels = [2, 5, 7]
    assert compress_mask(0b10000100, labels) == 0b101
    assert expand_mask(0b101, labels) == 0b10000100


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # self-loop
    with pytest.raises(ValueError):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_neighborhoods_and_components():
    g = path_graph(5)
    assert g.neighborhood(0b00100) == 0b01010
    assert g.closed_neighborhood(0b00001) == 0b00011
    assert g.boundary(0b00111) == 0b00100
    assert g.components(0b10101) == [1, 4, 16]
    assert g.is_connected()
    assert not g.is_connected_set(0b00101)


def test_quotient():
    g = path_graph(4)
    q = g.quotient([0b0011, 0b1100])
    assert q.n == 2 and q.adj == (2, 1)
    with pytest.raises(NotAPartition):
        g.quotient([0b0011, 0b0110])
    with pytest.raises(NotAPartition):
        g.quotient([0b0011])
    with pytest.raises(PartNotConnected):
        g.quotient([0b0101, 0b1010])


def test_path_order():
    assert path_graph(6).path_order() == [0, 1, 2, 3, 4, 5]
    assert path_graph(1).as_path_length() == 1
    assert cycle_graph(4).as_path_length() is None
    assert star_graph(3).as_path_length() is None


def test_induced_relabels():
    g = path_graph(5)
    h, labels = g.induced(0b11010)
    assert labels == [1, 3, 4]
    assert h.adj == (0, 4, 2)


def test_witness_checks():
    g = path_graph(4)
    w = WitnessStructure((0b0001, 0b0010, 0b1100))
    assert verify_witness(g, w)
    assert w.t == 3
    assert w.odd_union() == 0b1101
    assert w.even_union() == 0b0010
    assert w.reversed().parts == (0b1100, 0b0010, 0b0001)
    assert witness_violation(g, WitnessStructure((0b0011, 0b1100, 0))) == "empty-part"
    assert (
        witness_violation(g, WitnessStructure((0b0011, 0b0110)))
        == "parts-overlap"
    )
    assert (
        witness_violation(g, WitnessStructure((0b0001, 0b0010)))
        == "parts-missing-vertices"
    )
    assert (
        witness_violation(g, WitnessStructure((0b0101, 0b1010)))
        == "part-not-connected"
    )
    assert (
        witness_violation(cycle_graph(4), WitnessStructure((1, 2, 4, 8)))
        == "adjacency-not-consecutive"
    )


def test_parse_graph():
    g = parse_graph("# comment\n4 3\n0 1\n1 2\n2 3\n")
    assert g == path_graph(4)
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError):
        parse_graph("4\n")
    with pytest.raises(ParseError):
        parse_graph("2 1\n0 0\n")
    with pytest.raises(ParseError):
        parse_graph("2 1\n0 5\n")
    with pytest.raises(ParseError):
        parse_graph("2 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph("300 0\n")


def test_families():
    assert complete_graph(4).edge_count() == 6
    assert cycle_graph(5).edge_count() == 5
    assert star_graph(4).edge_count() == 4
