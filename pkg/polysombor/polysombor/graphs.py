"""
Immutable simple graphs and the vertex surgery that polymer constructions need.

Vertex ids are dense 0-based integers. Every operation that renumbers vertices
also returns a vertex map: a tuple whose i-th entry is the new id of old
vertex i (``None`` for a vertex that was deleted).
"""
import collections
import logging as logmodule

import networkx as nx
from django.core.exceptions import ObjectDoesNotExist

logging = logmodule.getLogger(__name__)


class InvalidParameter(ValueError):
    pass


class MergeConflict(ValueError):
    pass


class VertexNotFound(ObjectDoesNotExist):
    pass


class EdgeNotFound(ObjectDoesNotExist):
    pass


Block = collections.namedtuple('Block', ['graph', 'vertices'])


def edge_key(u, v):
    return (u, v) if u < v else (v, u)


class Graph(object):
    """
    Simple undirected graph. Instances never change after construction; every
    operation in this module returns a new graph.
    """
    __slots__ = ('vertex_count', 'edges', '_adjacency', '_degrees', '_view')

    def __init__(self, vertex_count, edges=()):
        if vertex_count < 0:
            raise InvalidParameter("Vertex count must be nonnegative, got {}".format(vertex_count))
        edge_set = set()
        adjacency = [set() for _ in range(vertex_count)]
        for u, v in edges:
            for w in (u, v):
                if not 0 <= w < vertex_count:
                    raise VertexNotFound("Vertex {} is not in a graph of order {}".format(w, vertex_count))
            if u == v:
                raise InvalidParameter("Self-loop at vertex {}".format(u))
            key = edge_key(u, v)
            if key in edge_set:
                raise InvalidParameter("Parallel edge {}".format(key))
            edge_set.add(key)
            adjacency[u].add(v)
            adjacency[v].add(u)

        object.__setattr__(self, 'vertex_count', vertex_count)
        object.__setattr__(self, 'edges', frozenset(edge_set))
        object.__setattr__(self, '_adjacency', tuple(frozenset(a) for a in adjacency))
        object.__setattr__(self, '_degrees', tuple(len(a) for a in adjacency))
        object.__setattr__(self, '_view', None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return "Graph(vertex_count={}, edge_count={})".format(self.vertex_count, self.edge_count)

    @property
    def edge_count(self):
        return len(self.edges)

    @property
    def degrees(self):
        return self._degrees

    def vertices(self):
        return range(self.vertex_count)

    def check_vertex(self, v):
        if not (isinstance(v, int) and 0 <= v < self.vertex_count):
            raise VertexNotFound("Vertex {} is not in {!r}".format(v, self))

    def degree(self, v):
        self.check_vertex(v)
        return self._degrees[v]

    def neighbors(self, v):
        self.check_vertex(v)
        return self._adjacency[v]

    def has_edge(self, u, v):
        return edge_key(u, v) in self.edges

    def sorted_edges(self):
        return sorted(self.edges)

    def to_networkx(self):
        """Frozen ``nx.Graph`` view on the same vertex ids, built once."""
        if self._view is None:
            view = nx.Graph()
            view.add_nodes_from(self.vertices())
            view.add_edges_from(self.edges)
            object.__setattr__(self, '_view', nx.freeze(view))
        return self._view


def cycle_graph(q):
    if q < 3:
        raise InvalidParameter("A cycle needs at least 3 vertices, got {}".format(q))
    return Graph(q, [(i, (i + 1) % q) for i in range(q)])


def complete_graph(n):
    if n < 1:
        raise InvalidParameter("A complete graph needs at least 1 vertex, got {}".format(n))
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n):
    """P_n: n vertices, n - 1 edges."""
    if n < 1:
        raise InvalidParameter("A path needs at least 1 vertex, got {}".format(n))
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n):
    """K_{1,n} with the center at vertex 0."""
    if n < 0:
        raise InvalidParameter("A star needs a nonnegative number of leaves, got {}".format(n))
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def disjoint_union(graphs):
    vertex_maps = []
    edges = []
    offset = 0
    for g in graphs:
        vertex_maps.append(tuple(range(offset, offset + g.vertex_count)))
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return Graph(offset, edges), vertex_maps


def identify(g, u, v):
    """
    Merge vertex v into vertex u. The merged vertex keeps every edge of both,
    so its degree is d_u + d_v. Raises MergeConflict when u and v are adjacent
    or share a neighbor.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise InvalidParameter("Cannot identify vertex {} with itself".format(u))
    if g.has_edge(u, v):
        raise MergeConflict("Vertices {} and {} are adjacent; identifying them makes a loop".format(u, v))
    shared = g.neighbors(u) & g.neighbors(v)
    if shared:
        raise MergeConflict("Vertices {} and {} share neighbors {}; identifying them makes parallel edges".format(
            u, v, sorted(shared)))

    vertex_map = [w if w < v else w - 1 for w in range(g.vertex_count)]
    vertex_map[v] = vertex_map[u]
    vertex_map = tuple(vertex_map)
    merged = Graph(g.vertex_count - 1, [(vertex_map[a], vertex_map[b]) for a, b in g.edges])
    return merged, vertex_map


def delete_edge(g, u, v):
    key = edge_key(u, v)
    if key not in g.edges:
        raise EdgeNotFound("Edge {} is not in {!r}".format(key, g))
    return Graph(g.vertex_count, g.edges - {key})


def delete_vertex(g, v):
    g.check_vertex(v)
    vertex_map = tuple(None if w == v else (w if w < v else w - 1) for w in range(g.vertex_count))
    edges = [(vertex_map[a], vertex_map[b]) for a, b in g.edges if v not in (a, b)]
    return Graph(g.vertex_count - 1, edges), vertex_map


def relabel(g, permutation):
    if sorted(permutation) != list(range(g.vertex_count)):
        raise InvalidParameter("Relabeling must be a permutation of 0..{}".format(g.vertex_count - 1))
    return Graph(g.vertex_count, [(permutation[u], permutation[v]) for u, v in g.edges])


def compose_maps(first, second):
    """Vertex map of applying ``first`` and then ``second``."""
    return tuple(None if w is None else second[w] for w in first)


def components(g):
    """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
    return sorted(sorted(component) for component in nx.connected_components(g.to_networkx()))


def is_connected(g):
    # the empty graph and K_1 count as connected
    if g.vertex_count <= 1:
        return True
    return nx.is_connected(g.to_networkx())


def degree_sequence(g):
    return tuple(sorted(g.degrees, reverse=True))


class Census(collections.Counter):
    """
    Multiset of unordered endpoint-degree pairs. Keys are (a, b) with a <= b;
    counts are always positive.
    """

    @classmethod
    def from_counts(cls, counts):
        census = cls()
        for (a, b), count in counts:
            census.add_pair(a, b, count)
        return census

    def add_pair(self, a, b, count=1):
        if count < 0:
            raise InvalidParameter("Negative edge count {} for degree pair {}".format(count, (a, b)))
        if count:
            self[edge_key(a, b)] += count

    def merged(self, other):
        result = Census(self)
        result.update(other)
        return result

    @property
    def edge_total(self):
        return sum(self.values())

    def items_sorted(self):
        return sorted(self.items())

    def __str__(self):
        return ", ".join("{{{},{}}}: {}".format(a, b, count) for (a, b), count in self.items_sorted())


def edge_census(g):
    census = Census()
    for u, v in g.edges:
        census.add_pair(g.degree(u), g.degree(v))
    return census


def blocks(g):
    """
    Biconnected components of ``g``. Bridges come out as K_2 blocks and
    isolated vertices as K_1 blocks. Each Block carries the original ids of
    its vertices, in block order; blocks are ordered by their vertices.
    """
    view = g.to_networkx()
    result = [_block_from_edges(block_edges) for block_edges in nx.biconnected_component_edges(view)]
    result.extend(Block(Graph(1), (v,)) for v in nx.isolates(view))
    return sorted(result, key=lambda block: block.vertices)


def _block_from_edges(block_edges):
    vertices = sorted({w for edge in block_edges for w in edge})
    local = {w: i for i, w in enumerate(vertices)}
    return Block(Graph(len(vertices), [(local[a], local[b]) for a, b in block_edges]), tuple(vertices))


def is_cactus(g):
    if not is_connected(g):
        return False
    for block in blocks(g):
        if block.graph.edge_count > 1 and block.graph.edge_count != block.graph.vertex_count:
            return False
    return True
