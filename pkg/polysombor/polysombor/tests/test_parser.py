import pytest

from polysombor import graphs
from polysombor.families import CactusAlias, Dendrimer, DendrimerD3, Poly, QGraph, Spiro, Triangulane
from polysombor.graphs import InvalidParameter
from polysombor.utils.parser import (EdgeListError, FamilySpecError, parse_family_spec, parse_unit_name,
                                     read_edge_list, write_edge_list)


@pytest.fixture
def spec_tests():
    return [
        ("q:m=5,n=4", QGraph(5, 4)),
        ("spiro:q=6,h=2,k=8", Spiro(6, 2, 8)),
        ("poly:q=6,h=1,k=4", Poly(6, 1, 4)),
        ("cactus:name=Qn,n=5", CactusAlias('Q', 5)),
        ("cactus:name=Oh,n=3", CactusAlias('Oh', 3)),
        ("triangulane:k=3", Triangulane(3)),
        ("d3:n=2", DendrimerD3(2)),
        ("dendrimer:k=2", Dendrimer(2)),
        (" spiro:k=8,q=6,h=2 ", Spiro(6, 2, 8)),
    ]


@pytest.fixture
def bad_specs():
    return [
        "spiro",
        "spiro:",
        "spiro q=6,h=2,k=8",
        "spiro:q=6,h=2",
        "spiro:q=6,h=9,k=2",
        "spiro:q=6,h=2,k=8,z=1",
        "q:m=1,m=2,n=3",
        "hexagon:n=2",
        "cactus:name=Zn,n=2",
        "d3:n=-1",
    ]


def test_parse_family_spec(spec_tests):
    for text, expected in spec_tests:
        assert parse_family_spec(text) == expected, "{!r} did not parse to {}".format(text, expected)


def test_spec_text_round_trip(spec_tests):
    for _, spec in spec_tests:
        assert parse_family_spec(str(spec)) == spec


def test_bad_family_specs(bad_specs):
    for text in bad_specs:
        with pytest.raises(FamilySpecError):
            parse_family_spec(text)


def test_read_edge_list():
    text = "c a triangle\nc\tdrawn by hand\np 3 3\n\ne 1 2\nc\ne 2 3\ne 1 3\n"
    assert read_edge_list(text) == graphs.cycle_graph(3)


def test_write_edge_list_sorts_edges():
    assert write_edge_list(graphs.cycle_graph(3)) == "p 3 3\ne 1 2\ne 1 3\ne 2 3\n"
    assert write_edge_list(graphs.Graph(1), comment="d3:n=0").startswith("c d3:n=0\np 1 0\n")


def test_written_edge_list_reads_back():
    g = graphs.Graph(6, [(0, 5), (1, 2), (2, 5), (3, 4)])
    assert read_edge_list(write_edge_list(g, comment="sample")) == g


@pytest.fixture
def bad_edge_lists():
    return [
        "e 1 2\n",
        "p 2 1\np 2 1\ne 1 2\n",
        "p 3 2\ne 1 2\n",
        "p 2 1\ne 1 3\n",
        "p 2 1\ne 0 1\n",
        "p 2 1\ne 2 2\n",
        "p 3 2\ne 1 2\ne 2 1\n",
        "p 2 1\nx 1 2\n",
        "",
    ]


def test_bad_edge_lists(bad_edge_lists):
    for text in bad_edge_lists:
        with pytest.raises(EdgeListError):
            read_edge_list(text)


def test_parse_unit_name():
    assert parse_unit_name("C5") == graphs.cycle_graph(5)
    assert parse_unit_name("K1") == graphs.complete_graph(1)
    assert parse_unit_name("P3") == graphs.path_graph(3)
    with pytest.raises(InvalidParameter):
        parse_unit_name("X3")
    with pytest.raises(InvalidParameter):
        parse_unit_name("C2")
