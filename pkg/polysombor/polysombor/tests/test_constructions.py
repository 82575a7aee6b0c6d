from fractions import Fraction

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from polysombor import constructions, families, graphs
from polysombor.constructions import (ASSEMBLY_DEGREES, CONVENTIONS, UNIT_DEGREES, AssemblyMismatch, InvalidUnit,
                                      RootedUnit)
from polysombor.graphs import Census, InvalidParameter
from polysombor.radicals import GREATER, RadicalSum, cmp_numeric
from polysombor.sombor import sombor_index

PRIMITIVES = [graphs.cycle_graph(q) for q in range(3, 7)] + [graphs.complete_graph(n) for n in range(2, 5)] + \
    [graphs.path_graph(n) for n in range(2, 5)]


@st.composite
def rooted_units(draw, two_contacts):
    g = draw(st.sampled_from(PRIMITIVES))
    x = draw(st.integers(min_value=0, max_value=g.vertex_count - 1))
    if not two_contacts:
        return RootedUnit(g, x)
    y = draw(st.integers(min_value=0, max_value=g.vertex_count - 1).filter(lambda v: v != x))
    return RootedUnit(g, x, y)


def unit_lists(two_contacts, min_size=2):
    return st.lists(rooted_units(two_contacts), min_size=min_size, max_size=4)


@pytest.fixture
def edge_unit():
    return RootedUnit(graphs.complete_graph(2), 0, 1)


@pytest.fixture
def triangle_unit():
    return RootedUnit(graphs.cycle_graph(3), 0, 1)


@pytest.fixture
def point_unit():
    return RootedUnit(graphs.complete_graph(1), 0)


def test_rooted_unit_validation():
    with pytest.raises(InvalidUnit):
        RootedUnit(graphs.cycle_graph(3), 3)
    with pytest.raises(InvalidUnit):
        RootedUnit(graphs.cycle_graph(3), 1, 1)
    with pytest.raises(InvalidUnit):
        RootedUnit(graphs.Graph(2), 0)
    with pytest.raises(InvalidUnit):
        constructions.link([RootedUnit(graphs.cycle_graph(3), 0)])


def test_link_of_edges_is_a_path(edge_unit):
    assembly = constructions.link([edge_unit, edge_unit])
    assert assembly.graph == graphs.path_graph(4)
    assert assembly.contact_ids == [0, 1, 2, 3]
    assert len(assembly.monomers()) == 3


def test_chain_of_triangles_is_a_bowtie(triangle_unit):
    assembly = constructions.chain([triangle_unit, triangle_unit])
    assert assembly.graph.vertex_count == 5
    assert graphs.edge_census(assembly.graph) == Census({(2, 2): 2, (2, 4): 4})
    assert assembly.contact_ids == [0, 1, 3]


def test_circuit_of_points_is_a_cycle(point_unit):
    assembly = constructions.circuit([point_unit] * 3)
    assert assembly.graph == graphs.cycle_graph(3)
    so = sombor_index(assembly.graph)
    assert so == RadicalSum({2: 6})
    assert so == constructions.circuit_lower_bound_2k(assembly.units)


def test_circuit_needs_three_units(point_unit):
    with pytest.raises(InvalidParameter):
        constructions.circuit([point_unit, point_unit])
    with pytest.raises(InvalidParameter):
        constructions.circuit_lower_bound_2k([point_unit])


def test_bouquet_of_edges_is_a_star(edge_unit):
    assembly = constructions.bouquet([edge_unit] * 3)
    assert graphs.edge_census(assembly.graph) == Census({(1, 3): 3})
    assert constructions.bouquet_lower_bound(assembly, assembly.units) == RadicalSum({2: 3})
    assert constructions.bouquet_lower_bound(assembly, assembly.units, UNIT_DEGREES) == RadicalSum({2: 1})


def test_chain_bounds_on_p3(edge_unit):
    assembly = constructions.chain([edge_unit, edge_unit])
    assert assembly.graph == graphs.path_graph(3)
    expected = RadicalSum({2: Fraction(3, 2)})
    assert constructions.chain_lower_bound_i(assembly, assembly.units) == expected
    assert constructions.chain_lower_bound_ii(assembly, assembly.units) == expected
    assert cmp_numeric(sombor_index(assembly.graph), expected) == GREATER


def test_link_bound_conventions_agree_on_edges(edge_unit):
    assembly = constructions.link([edge_unit, edge_unit])
    for convention in CONVENTIONS:
        assert constructions.link_lower_bound(assembly, assembly.units, convention) == RadicalSum({2: 2})


def test_bounds_check_pairing(edge_unit, triangle_unit):
    assembly = constructions.chain([edge_unit, edge_unit])
    with pytest.raises(AssemblyMismatch):
        constructions.link_lower_bound(assembly, assembly.units)
    with pytest.raises(AssemblyMismatch):
        constructions.chain_lower_bound_ii(assembly, [triangle_unit, edge_unit])
    with pytest.raises(InvalidParameter):
        constructions.chain_lower_bound_ii(assembly, assembly.units, 'both')
    single = constructions.chain([edge_unit])
    with pytest.raises(InvalidParameter):
        constructions.chain_lower_bound_i(single, single.units)


def test_point_attach_builds_q_graph():
    units = [RootedUnit(graphs.complete_graph(3), 0)] + [RootedUnit(graphs.complete_graph(2), 0)] * 3
    assembly = constructions.point_attach(units, [(0, 0), (0, 1), (0, 2)])
    assert assembly.graph.vertex_count == 6
    assert assembly.graph.edge_count == 6
    with pytest.raises(InvalidParameter):
        constructions.point_attach(units, [(0, 0), (2, 1), (0, 2)])
    with pytest.raises(InvalidParameter):
        constructions.point_attach(units, [(0, 0)])


def test_chain_of_cycles_matches_spiro():
    units = [RootedUnit(graphs.cycle_graph(6), 0, 2)] * 8
    assembly = constructions.chain(units)
    spiro = families.generate(families.Spiro(6, 2, 8))
    assert graphs.edge_census(assembly.graph) == graphs.edge_census(spiro.graph)
    assert sombor_index(assembly.graph) == sombor_index(spiro.graph)


@given(unit_lists(two_contacts=True))
def test_link_sizes_and_bound(units):
    assembly = constructions.link(units)
    assert assembly.graph.vertex_count == sum(u.graph.vertex_count for u in units)
    assert assembly.graph.edge_count == sum(u.graph.edge_count for u in units) + len(units) - 1
    assert graphs.is_connected(assembly.graph)
    so = sombor_index(assembly.graph)
    for convention in CONVENTIONS:
        assert cmp_numeric(so, constructions.link_lower_bound(assembly, units, convention)) == GREATER


@given(unit_lists(two_contacts=True))
def test_chain_sizes_and_bounds(units):
    assembly = constructions.chain(units)
    assert assembly.graph.vertex_count == sum(u.graph.vertex_count for u in units) - len(units) + 1
    assert assembly.graph.edge_count == sum(u.graph.edge_count for u in units)
    so = sombor_index(assembly.graph)
    for convention in CONVENTIONS:
        assert cmp_numeric(so, constructions.chain_lower_bound_i(assembly, units, convention)) == GREATER
        assert cmp_numeric(so, constructions.chain_lower_bound_ii(assembly, units, convention)) == GREATER


@given(unit_lists(two_contacts=False, min_size=3))
def test_circuit_sizes_and_bounds(units):
    assembly = constructions.circuit(units)
    assert assembly.graph.vertex_count == sum(u.graph.vertex_count for u in units)
    assert assembly.graph.edge_count == sum(u.graph.edge_count for u in units) + len(units)
    so = sombor_index(assembly.graph)
    for convention in CONVENTIONS:
        assert cmp_numeric(so, constructions.circuit_lower_bound_deg(assembly, units, convention)) == GREATER
    assert cmp_numeric(so, constructions.circuit_lower_bound_2k(units)) == GREATER


@hypothesis_settings(max_examples=50)
@given(unit_lists(two_contacts=False))
def test_bouquet_sizes_and_bound(units):
    assembly = constructions.bouquet(units)
    assert assembly.graph.vertex_count == sum(u.graph.vertex_count for u in units) - len(units) + 1
    assert assembly.contact_ids == [assembly.image(0, units[0].x)]
    so = sombor_index(assembly.graph)
    assert cmp_numeric(so, constructions.bouquet_lower_bound(assembly, units, ASSEMBLY_DEGREES)) == GREATER
    assert cmp_numeric(so, constructions.bouquet_lower_bound(assembly, units, UNIT_DEGREES)) == GREATER
