"""
The Sombor index SO(G), the sum over edges uv of sqrt(d_u^2 + d_v^2), and the
two universal inequalities stated over it: the edge-deletion bound and the
monomer-sum bound for polymer graphs.
"""
import collections
from fractions import Fraction

from polysombor import graphs
from polysombor.radicals import GREATER, LESS, RadicalSum, cmp_numeric, radical_of, squarefree_split

NOT_APPLICABLE = 'not-applicable'

# 1/sqrt(2)
HALF_SQRT2 = RadicalSum({2: Fraction(1, 2)})

BoundReport = collections.namedtuple('BoundReport', ['holds', 'ordering', 'lhs', 'rhs'])


def sombor_index(g):
    totals = collections.defaultdict(int)
    degrees = g.degrees
    for u, v in g.edges:
        outside, inside = squarefree_split(degrees[u] ** 2 + degrees[v] ** 2)
        totals[inside] += outside
    return RadicalSum(totals)


def sombor_from_census(census):
    """SO as the proofs compute it: each degree-pair class times its edge weight."""
    total = RadicalSum()
    for (a, b), count in census.items_sorted():
        total = total + radical_of(a * a + b * b) * count
    return total


def deletion_bound_holds(g, u, v, so_g=None):
    """
    Check SO(G - e) < SO(G) - |d_u - d_v| / sqrt(2) for e = uv, with degrees
    measured in G before the deletion.
    """
    g_minus_e = graphs.delete_edge(g, u, v)
    if so_g is None:
        so_g = sombor_index(g)
    lhs = sombor_index(g_minus_e)
    rhs = so_g - HALF_SQRT2 * abs(g.degree(u) - g.degree(v))
    ordering = cmp_numeric(lhs, rhs)
    return BoundReport(ordering == LESS, ordering, lhs, rhs)


def monomer_sum_bound_holds(g, monomers, so_g=None):
    """
    Check SO(G) > sum of SO(G_i) for a polymer graph built from ``monomers``.
    The inequality is strict only when at least two monomers carry an edge;
    otherwise the report says not applicable.
    """
    if so_g is None:
        so_g = sombor_index(g)
    rhs = RadicalSum()
    for monomer in monomers:
        rhs = rhs + sombor_index(monomer)
    if sum(1 for monomer in monomers if monomer.edge_count) < 2:
        return BoundReport(None, NOT_APPLICABLE, so_g, rhs)
    ordering = cmp_numeric(so_g, rhs)
    return BoundReport(ordering == GREATER, ordering, so_g, rhs)


def block_sum_bound_holds(g, so_g=None):
    """The monomer-sum bound with the block decomposition of g as the monomers."""
    return monomer_sum_bound_holds(g, [block.graph for block in graphs.blocks(g)], so_g=so_g)
