"""
Polymer composition operators: link, chain, circuit, bouquet and general
point attaching, plus the lower bounds on SO for each named operator.

Every lower bound takes a degree ``convention``. With ``"assembly"`` the
degrees of contact vertices and their neighbors are read from the assembled
graph; with ``"unit"`` they are read from the monomer units before assembly.
"""
import collections
import logging as logmodule

from polysombor import graphs
from polysombor.graphs import InvalidParameter
from polysombor.radicals import RadicalSum, radical_of
from polysombor.sombor import HALF_SQRT2, sombor_index

logging = logmodule.getLogger(__name__)

LINK = 'link'
CHAIN = 'chain'
CIRCUIT = 'circuit'
BOUQUET = 'bouquet'
POLYMER = 'polymer'

UNIT_DEGREES = 'unit'
ASSEMBLY_DEGREES = 'assembly'
CONVENTIONS = (UNIT_DEGREES, ASSEMBLY_DEGREES)


class InvalidUnit(InvalidParameter):
    pass


class AssemblyMismatch(InvalidParameter):
    pass


class RootedUnit(collections.namedtuple('RootedUnit', ['graph', 'x', 'y'])):
    """A connected monomer with contact vertex x and optional second contact y."""
    __slots__ = ()

    def __new__(cls, graph, x, y=None):
        for contact in (x, y):
            if contact is not None and not (isinstance(contact, int) and 0 <= contact < graph.vertex_count):
                raise InvalidUnit("Contact {} is not a vertex of {!r}".format(contact, graph))
        if x is None:
            raise InvalidUnit("A unit needs a contact vertex x")
        if x == y:
            raise InvalidUnit("Contacts x and y must differ, both are {}".format(x))
        if not graphs.is_connected(graph):
            raise InvalidUnit("Monomer units must be connected: {!r}".format(graph))
        return super(RootedUnit, cls).__new__(cls, graph, x, y)

    def degree(self, v):
        return self.graph.degree(v)


class Assembly(collections.namedtuple('Assembly', ['operator', 'graph', 'unit_maps', 'contact_ids', 'units'])):
    """
    An assembled polymer graph. ``unit_maps[i]`` maps the vertices of
    ``units[i].graph`` to vertices of ``graph``.
    """
    __slots__ = ()

    def image(self, index, v):
        return self.unit_maps[index][v]

    def monomers(self):
        """Monomer graphs in the point-attaching sense, including bridges and the circuit cycle."""
        result = [unit.graph for unit in self.units]
        if self.operator == LINK:
            result.extend(graphs.complete_graph(2) for _ in range(len(self.units) - 1))
        elif self.operator == CIRCUIT:
            result.append(graphs.cycle_graph(len(self.units)))
        return result


def _dedupe(ids):
    seen = set()
    result = []
    for v in ids:
        if v not in seen:
            seen.add(v)
            result.append(v)
    return result


def _require_units(units, minimum=1):
    units = list(units)
    if len(units) < minimum:
        raise InvalidParameter("Need at least {} units, got {}".format(minimum, len(units)))
    return units


def _require_two_contacts(units):
    for index, unit in enumerate(units):
        if unit.y is None:
            raise InvalidUnit("Unit {} has no second contact y".format(index))


def _contacts(units, unit_maps):
    ids = []
    for index, unit in enumerate(units):
        ids.append(unit_maps[index][unit.x])
        if unit.y is not None:
            ids.append(unit_maps[index][unit.y])
    return _dedupe(ids)


def _identify_tracked(g, unit_maps, keep, drop):
    merged, vertex_map = graphs.identify(g, keep, drop)
    return merged, [graphs.compose_maps(m, vertex_map) for m in unit_maps]


def link(units):
    """Join y_i to x_{i+1} by a new edge."""
    units = _require_units(units)
    _require_two_contacts(units)
    g, unit_maps = graphs.disjoint_union([unit.graph for unit in units])
    bridges = [(unit_maps[i][units[i].y], unit_maps[i + 1][units[i + 1].x]) for i in range(len(units) - 1)]
    g = graphs.Graph(g.vertex_count, list(g.edges) + bridges)
    logging.debug("Linked {} units into {!r}".format(len(units), g))
    return Assembly(LINK, g, unit_maps, _contacts(units, unit_maps), tuple(units))


def chain(units):
    """Identify y_i with x_{i+1}."""
    units = _require_units(units)
    _require_two_contacts(units)
    g, unit_maps = graphs.disjoint_union([unit.graph for unit in units])
    for i in range(len(units) - 1):
        g, unit_maps = _identify_tracked(g, unit_maps, unit_maps[i][units[i].y], unit_maps[i + 1][units[i + 1].x])
    logging.debug("Chained {} units into {!r}".format(len(units), g))
    return Assembly(CHAIN, g, unit_maps, _contacts(units, unit_maps), tuple(units))


def circuit(units):
    """Identify x_i with the i-th vertex of a cycle C_k."""
    units = list(units)
    if len(units) < 3:
        raise InvalidParameter("A circuit needs at least 3 units, got {}".format(len(units)))
    g, maps = graphs.disjoint_union([unit.graph for unit in units] + [graphs.cycle_graph(len(units))])
    cycle_map = maps.pop()
    for i, unit in enumerate(units):
        merged, vertex_map = graphs.identify(g, maps[i][unit.x], cycle_map[i])
        maps = [graphs.compose_maps(m, vertex_map) for m in maps]
        cycle_map = graphs.compose_maps(cycle_map, vertex_map)
        g = merged
    logging.debug("Built circuit of {} units: {!r}".format(len(units), g))
    return Assembly(CIRCUIT, g, maps, _dedupe(maps[i][unit.x] for i, unit in enumerate(units)), tuple(units))


def bouquet(units):
    """Identify every x_i into one hub vertex."""
    units = _require_units(units)
    g, unit_maps = graphs.disjoint_union([unit.graph for unit in units])
    for i in range(1, len(units)):
        g, unit_maps = _identify_tracked(g, unit_maps, unit_maps[0][units[0].x], unit_maps[i][units[i].x])
    logging.debug("Built bouquet of {} units: {!r}".format(len(units), g))
    return Assembly(BOUQUET, g, unit_maps, [unit_maps[0][units[0].x]], tuple(units))


def point_attach(units, anchors):
    """
    General polymer: unit i (i >= 1) is attached by identifying its x with
    vertex ``w`` of an earlier unit ``j``, where ``anchors[i - 1] == (j, w)``.
    """
    units = _require_units(units)
    if len(anchors) != len(units) - 1:
        raise InvalidParameter("Need {} anchors for {} units, got {}".format(len(units) - 1, len(units), len(anchors)))
    g, unit_maps = graphs.disjoint_union([unit.graph for unit in units])
    for i, (j, w) in enumerate(anchors, start=1):
        if not 0 <= j < i:
            raise InvalidParameter("Unit {} can only attach to an earlier unit, got {}".format(i, j))
        units[j].graph.check_vertex(w)
        g, unit_maps = _identify_tracked(g, unit_maps, unit_maps[j][w], unit_maps[i][units[i].x])
    return Assembly(POLYMER, g, unit_maps, _contacts(units, unit_maps), tuple(units))


def _check_pairing(assembly, units, operator, convention=UNIT_DEGREES):
    units = tuple(units)
    if assembly.operator != operator:
        raise AssemblyMismatch("Expected a {} assembly, got {}".format(operator, assembly.operator))
    if units != assembly.units:
        raise AssemblyMismatch("Units do not match the {} assembly".format(operator))
    if convention not in CONVENTIONS:
        raise InvalidParameter("Unknown degree convention {!r}".format(convention))
    return units


def _sum_sombor(gs):
    total = RadicalSum()
    for g in gs:
        total = total + sombor_index(g)
    return total


def _without_contact(unit):
    return graphs.delete_vertex(unit.graph, unit.x)[0]


def _gap_term(a, b):
    return HALF_SQRT2 * abs(a - b)


def link_lower_bound(assembly, units, convention=UNIT_DEGREES):
    units = _check_pairing(assembly, units, LINK, convention)
    g = assembly.graph
    total = _sum_sombor(unit.graph for unit in units)
    for i in range(len(units) - 1):
        if convention == UNIT_DEGREES:
            d_y = units[i].degree(units[i].y)
            d_x = units[i + 1].degree(units[i + 1].x)
        else:
            d_y = g.degree(assembly.image(i, units[i].y))
            d_x = g.degree(assembly.image(i + 1, units[i + 1].x))
        total = total + _gap_term(d_x, d_y)
    return total


def circuit_lower_bound_deg(assembly, units, convention=UNIT_DEGREES):
    units = _check_pairing(assembly, units, CIRCUIT, convention)
    if convention == UNIT_DEGREES:
        degrees = [unit.degree(unit.x) for unit in units]
    else:
        degrees = [assembly.graph.degree(assembly.image(i, unit.x)) for i, unit in enumerate(units)]
    total = _sum_sombor(unit.graph for unit in units)
    for i in range(len(units)):
        total = total + _gap_term(degrees[i], degrees[(i + 1) % len(units)])
    return total


def circuit_lower_bound_2k(units):
    """2k*sqrt(2) + sum of SO(G_i); equal to SO exactly when every unit is K_1."""
    units = list(units)
    if len(units) < 3:
        raise InvalidParameter("A circuit needs at least 3 units, got {}".format(len(units)))
    return radical_of(8) * len(units) + _sum_sombor(unit.graph for unit in units)


def _joint_terms(assembly, index, unit, joint_unit_degree, convention):
    """
    Sum of |d_u - d_joint| / sqrt(2) over the neighbors u of x in ``unit``,
    where ``unit`` is units[index] and x is merged into a joint vertex.
    """
    total = RadicalSum()
    if convention == UNIT_DEGREES:
        d_joint = joint_unit_degree
    else:
        d_joint = assembly.graph.degree(assembly.image(index, unit.x))
    for u in sorted(unit.graph.neighbors(unit.x)):
        if convention == UNIT_DEGREES:
            d_u = unit.degree(u)
        else:
            d_u = assembly.graph.degree(assembly.image(index, u))
        total = total + _gap_term(d_u, d_joint)
    return total


def chain_lower_bound_ii(assembly, units, convention=ASSEMBLY_DEGREES):
    units = _check_pairing(assembly, units, CHAIN, convention)
    total = sombor_index(units[0].graph)
    for i in range(1, len(units)):
        total = total + sombor_index(_without_contact(units[i]))
        total = total + _joint_terms(assembly, i, units[i], units[i - 1].degree(units[i - 1].y), convention)
    return total


def chain_lower_bound_i(assembly, units, convention=ASSEMBLY_DEGREES):
    units = _check_pairing(assembly, units, CHAIN, convention)
    if len(units) < 2:
        raise InvalidParameter("The recursive chain bound needs at least 2 units")
    last = len(units) - 1
    subchain = chain(units[:last])
    total = sombor_index(subchain.graph) + sombor_index(_without_contact(units[last]))
    return total + _joint_terms(assembly, last, units[last], units[last - 1].degree(units[last - 1].y), convention)


def bouquet_lower_bound(assembly, units, convention=ASSEMBLY_DEGREES):
    units = _check_pairing(assembly, units, BOUQUET, convention)
    total = sombor_index(units[0].graph)
    for i in range(1, len(units)):
        total = total + sombor_index(_without_contact(units[i]))
        total = total + _joint_terms(assembly, i, units[i], units[i].degree(units[i].x), convention)
    return total
