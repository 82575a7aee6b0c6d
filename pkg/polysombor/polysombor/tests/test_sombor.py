from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polysombor import graphs
from polysombor.radicals import LESS, RadicalSum, radical_of
from polysombor.sombor import (NOT_APPLICABLE, block_sum_bound_holds, deletion_bound_holds,
                               monomer_sum_bound_holds, sombor_from_census, sombor_index)


@pytest.fixture
def bowtie():
    return graphs.Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def test_cycles():
    for q in range(3, 65):
        assert sombor_index(graphs.cycle_graph(q)) == RadicalSum({2: 2 * q}), "SO(C_{}) != {}√2".format(q, 2 * q)


def test_complete_graphs():
    for n in range(2, 13):
        expected = RadicalSum({2: Fraction(n * (n - 1) ** 2, 2)})
        assert sombor_index(graphs.complete_graph(n)) == expected, "SO(K_{}) mismatch".format(n)


def test_stars():
    for n in range(1, 13):
        assert sombor_index(graphs.star_graph(n)) == radical_of(n * n + 1) * n, "SO(K_1,{}) mismatch".format(n)


def test_edgeless_graph_is_zero():
    assert sombor_index(graphs.Graph(4)) == RadicalSum()


def test_census_sum_matches_edge_sum(bowtie):
    assert sombor_from_census(graphs.edge_census(bowtie)) == sombor_index(bowtie)
    assert sombor_index(bowtie) == RadicalSum({2: 4, 5: 8})


@given(st.integers(min_value=3, max_value=9).flatmap(
    lambda n: st.tuples(st.just(n), st.permutations(list(range(n))))))
def test_relabeling_invariance(case):
    n, permutation = case
    g = graphs.Graph(n, [(0, i) for i in range(1, n)] + [(1, 2)])
    assert sombor_index(graphs.relabel(g, permutation)) == sombor_index(g)


def test_deletion_bound_on_cycle():
    report = deletion_bound_holds(graphs.cycle_graph(5), 0, 1)
    assert report.holds
    assert report.ordering == LESS
    assert report.lhs == RadicalSum({2: 4, 5: 2})
    assert report.rhs == RadicalSum({2: 10})


def test_deletion_bound_on_every_edge_of_k4():
    g = graphs.complete_graph(4)
    for u, v in g.sorted_edges():
        assert deletion_bound_holds(g, u, v).holds, "Edge {}-{} violates the deletion bound".format(u, v)


def test_deletion_of_missing_edge_raises():
    with pytest.raises(graphs.EdgeNotFound):
        deletion_bound_holds(graphs.path_graph(3), 0, 2)


def test_monomer_sum_bound(bowtie):
    triangle = graphs.cycle_graph(3)
    report = monomer_sum_bound_holds(bowtie, [triangle, triangle])
    assert report.holds
    assert report.rhs == RadicalSum({2: 12})


def test_monomer_sum_bound_needs_two_monomers_with_edges():
    g = graphs.cycle_graph(3)
    assert monomer_sum_bound_holds(g, [g]).ordering == NOT_APPLICABLE
    assert monomer_sum_bound_holds(g, [g, graphs.complete_graph(1)]).holds is None


def test_block_sum_bound(bowtie):
    assert block_sum_bound_holds(bowtie).holds
    assert block_sum_bound_holds(graphs.complete_graph(4)).ordering == NOT_APPLICABLE
    assert block_sum_bound_holds(graphs.path_graph(4)).holds


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graphs.Graph(n, edges)


@given(st.lists(small_graphs(), min_size=1, max_size=4))
def test_sombor_index_adds_over_disjoint_union(parts):
    union, _ = graphs.disjoint_union(parts)
    total = RadicalSum()
    for g in parts:
        total = total + sombor_index(g)
    assert sombor_index(union) == total
