"""
Named polymer families: generators, closed-form Sombor indices and the
degree-pair edge counts each closed form is derived from.

Each family is a FamilySpec subclass. ``generate``, ``closed_form`` and
``census_prediction`` dispatch to it; ``expand_grid`` turns a grid config
into a list of specs.
"""
import collections
import functools
import itertools
import logging as logmodule
from fractions import Fraction

from polysombor import constructions, graphs
from polysombor.constructions import RootedUnit
from polysombor.graphs import Census, InvalidParameter
from polysombor.radicals import RadicalSum, radical_of

logging = logmodule.getLogger(__name__)

# name -> (q, h) of the equivalent spiro chain of cycles
CACTUS_ALIASES = collections.OrderedDict([
    ('T', (3, 1)),
    ('Q', (4, 2)),
    ('O', (4, 1)),
    ('Oh', (6, 1)),
    ('L', (6, 3)),
    ('M', (6, 2)),
])


class FamilySpec(object):
    __slots__ = ()
    family = None

    def validate(self):
        raise NotImplementedError

    def generate(self):
        raise NotImplementedError

    def closed_form(self):
        raise NotImplementedError

    def census_prediction(self):
        raise NotImplementedError

    def __str__(self):
        return "{}:{}".format(self.family, ",".join("{}={}".format(f, getattr(self, f)) for f in self._fields))


def _require(condition, message, *args):
    if not condition:
        raise InvalidParameter(message.format(*args))


def _int_fields(spec):
    for field in spec._fields:
        value = getattr(spec, field)
        _require(isinstance(value, int) and not isinstance(value, bool),
                 "{} needs an integer {}, got {!r}", spec.family, field, value)


class QGraph(FamilySpec, collections.namedtuple('QGraph', ['m', 'n'])):
    """K_m with every vertex identified with one vertex of its own copy of K_n."""
    __slots__ = ()
    family = 'q'

    def validate(self):
        _int_fields(self)
        _require(self.m >= 1 and self.n >= 1, "Q(m,n) needs m >= 1 and n >= 1, got {}", self)

    def generate(self):
        m, n = self.m, self.n
        units = [RootedUnit(graphs.complete_graph(m), 0)] + [RootedUnit(graphs.complete_graph(n), 0) for _ in range(m)]
        return constructions.point_attach(units, [(0, i) for i in range(m)])

    def closed_form(self):
        m, n = self.m, self.n
        total = RadicalSum({2: Fraction(m * (m + n - 2) * (m - 1) + m * (n - 1) ** 2 * (n - 2), 2)})
        if m * (n - 1):
            total = total + radical_of((m + n - 2) ** 2 + (n - 1) ** 2) * (m * (n - 1))
        return total

    def census_prediction(self):
        m, n = self.m, self.n
        census = Census()
        census.add_pair(m + n - 2, m + n - 2, m * (m - 1) // 2)
        census.add_pair(m + n - 2, n - 1, m * (n - 1))
        census.add_pair(n - 1, n - 1, m * (n - 1) * (n - 2) // 2)
        return census


class _CycleChainMixin(object):
    """Shared validation for k copies of C_q with contacts at cycle distance h."""
    __slots__ = ()

    def validate(self):
        _int_fields(self)
        _require(self.q >= 3, "{} needs q >= 3, got {}", self.family, self.q)
        _require(self.k >= 1, "{} needs k >= 1, got {}", self.family, self.k)
        _require(1 <= self.h <= self.q // 2, "{} needs 1 <= h <= {}, got {}", self.family, self.q // 2, self.h)

    def units(self):
        return [RootedUnit(graphs.cycle_graph(self.q), 0, self.h) for _ in range(self.k)]

    @property
    def adjacent_contacts(self):
        # a single cycle has no internal unit, so k = 1 takes the h >= 2 formulas
        return self.h == 1 and self.k >= 2


class Spiro(_CycleChainMixin, FamilySpec, collections.namedtuple('Spiro', ['q', 'h', 'k'])):
    __slots__ = ()
    family = 'spiro'

    def generate(self):
        return constructions.chain(self.units())

    def closed_form(self):
        q, k = self.q, self.k
        if self.adjacent_contacts:
            return RadicalSum({2: 2 * q * k - 2 * k - 4, 5: 4 * k})
        return RadicalSum({2: 2 * q * k - 8 * k + 8, 5: 8 * k - 8})

    def census_prediction(self):
        q, k = self.q, self.k
        if self.adjacent_contacts:
            return Census.from_counts([((4, 4), k - 2), ((2, 4), 2 * k), ((2, 2), q * k - 3 * k + 2)])
        return Census.from_counts([((2, 4), 4 * (k - 1)), ((2, 2), q * k - 4 * (k - 1))])


class Poly(_CycleChainMixin, FamilySpec, collections.namedtuple('Poly', ['q', 'h', 'k'])):
    __slots__ = ()
    family = 'poly'

    def generate(self):
        return constructions.link(self.units())

    def closed_form(self):
        q, k = self.q, self.k
        if self.adjacent_contacts:
            return RadicalSum({2: 2 * q * k - 5, 13: 2 * k})
        return RadicalSum({2: 2 * q * k - 5 * k + 5, 13: 4 * k - 4})

    def census_prediction(self):
        q, k = self.q, self.k
        if self.adjacent_contacts:
            return Census.from_counts([((3, 3), 2 * k - 3), ((2, 3), 2 * k), ((2, 2), q * k - 3 * k + 2)])
        return Census.from_counts([((3, 3), k - 1), ((2, 3), 4 * (k - 1)), ((2, 2), q * k - 4 * (k - 1))])


class CactusAlias(FamilySpec, collections.namedtuple('CactusAlias', ['name', 'n'])):
    """The six chemical cactus chains, each a Spiro chain with fixed q and h."""
    __slots__ = ()
    family = 'cactus'

    def validate(self):
        _require(self.name in CACTUS_ALIASES, "Unknown cactus {!r}, expected one of {}",
                 self.name, ", ".join(CACTUS_ALIASES))
        _require(isinstance(self.n, int) and self.n >= 1, "cactus needs n >= 1, got {!r}", self.n)

    def as_spiro(self):
        q, h = CACTUS_ALIASES[self.name]
        return Spiro(q, h, self.n)

    def generate(self):
        return self.as_spiro().generate()

    def closed_form(self):
        n = self.n
        if n == 1:
            return self.as_spiro().closed_form()
        if self.name == 'T':
            return RadicalSum({2: 4 * n - 4, 5: 4 * n})
        if self.name == 'Q':
            return RadicalSum({2: 8, 5: 8 * n - 8})
        if self.name == 'O':
            return RadicalSum({2: 6 * n - 4, 5: 4 * n})
        if self.name == 'Oh':
            return RadicalSum({2: 10 * n - 4, 5: 4 * n})
        # L and M
        return RadicalSum({2: 4 * n + 8, 5: 8 * n - 8})

    def census_prediction(self):
        return self.as_spiro().census_prediction()

    def __str__(self):
        return "cactus:name={}n,n={}".format(self.name, self.n)


@functools.lru_cache(maxsize=None)
def triangulane_unit(k):
    """G_1 is a triangle; G_k is the circuit of G_{k-1}, G_{k-1} and K_1, rooted at the K_1."""
    if k == 1:
        return RootedUnit(graphs.cycle_graph(3), 0)
    previous = triangulane_unit(k - 1)
    assembly = constructions.circuit([previous, previous, RootedUnit(graphs.complete_graph(1), 0)])
    return RootedUnit(assembly.graph, assembly.contact_ids[2])


class Triangulane(FamilySpec, collections.namedtuple('Triangulane', ['k'])):
    __slots__ = ()
    family = 'triangulane'

    def validate(self):
        _int_fields(self)
        _require(self.k >= 1, "triangulane needs k >= 1, got {}", self.k)

    def generate(self):
        unit = triangulane_unit(self.k)
        return constructions.circuit([unit, unit, unit])

    def closed_form(self):
        half = 2 ** (self.k - 1)
        return RadicalSum({2: 36 * (half - 1) + 6 * half + 12, 5: 6 * 2 ** self.k})

    def census_prediction(self):
        half = 2 ** (self.k - 1)
        return Census.from_counts([((4, 4), 3 + 9 * (half - 1)), ((2, 4), 3 * 2 ** self.k), ((2, 2), 3 * half)])


# hexagon vertices carrying the linker's in- and out-pendants; antipodal
LINKER_IN_SITE = 0
LINKER_OUT_SITE = 3


def dendrimer_linker():
    """A hexagon with pendant leaves at two antipodal vertices: in-root 6, out-root 7."""
    hexagon = graphs.cycle_graph(6)
    return RootedUnit(graphs.Graph(8, list(hexagon.edges) + [(6, LINKER_IN_SITE), (7, LINKER_OUT_SITE)]), 6, 7)


@functools.lru_cache(maxsize=None)
def dendrimer_unit(k):
    """G_1 is a hexagon with one pendant leaf as its root; G_k bouquets G_{k-1} twice with the linker."""
    if k == 1:
        return RootedUnit(graphs.Graph(7, list(graphs.cycle_graph(6).edges) + [(6, 0)]), 6)
    previous = dendrimer_unit(k - 1)
    linker = dendrimer_linker()
    assembly = constructions.bouquet([previous, previous, linker])
    return RootedUnit(assembly.graph, assembly.image(2, linker.y))


class DendrimerD3(FamilySpec, collections.namedtuple('DendrimerD3', ['n'])):
    __slots__ = ()
    family = 'd3'

    def validate(self):
        _int_fields(self)
        _require(self.n >= 0, "d3 needs n >= 0, got {}", self.n)

    def generate(self):
        unit = dendrimer_unit(self.n + 1)
        return constructions.bouquet([unit, unit, unit])

    def closed_form(self):
        return RadicalSum({2: 63 * 2 ** self.n - 30, 13: 18 * 2 ** self.n - 12})

    def census_prediction(self):
        p = 2 ** self.n
        return Census.from_counts([((3, 3), 9 * p - 6), ((2, 3), 18 * p - 12), ((2, 2), 18 * p - 6)])


class Dendrimer(FamilySpec, collections.namedtuple('Dendrimer', ['k'])):
    """D_k, the bouquet of three G_k; the same graph as d3 with n = k - 1."""
    __slots__ = ()
    family = 'dendrimer'

    def validate(self):
        _int_fields(self)
        _require(self.k >= 1, "dendrimer needs k >= 1, got {}", self.k)

    def as_d3(self):
        return DendrimerD3(self.k - 1)

    def generate(self):
        return self.as_d3().generate()

    def closed_form(self):
        return self.as_d3().closed_form()

    def census_prediction(self):
        return self.as_d3().census_prediction()


FAMILIES = collections.OrderedDict((cls.family, cls) for cls in (
    QGraph, Spiro, Poly, CactusAlias, Triangulane, DendrimerD3, Dendrimer))


def normalize_cactus_name(name):
    """Accept both the bare alias and its chain form, e.g. 'Q' and 'Qn'."""
    if isinstance(name, str) and name not in CACTUS_ALIASES and name.endswith('n') and name[:-1] in CACTUS_ALIASES:
        return name[:-1]
    return name


def build_spec(family, **values):
    if family == CactusAlias.family and 'name' in values:
        values['name'] = normalize_cactus_name(values['name'])
    try:
        cls = FAMILIES[family]
    except KeyError:
        raise InvalidParameter("Unknown family {!r}, expected one of {}".format(family, ", ".join(FAMILIES)))
    missing = set(cls._fields) - set(values)
    extra = set(values) - set(cls._fields)
    if missing or extra:
        raise InvalidParameter("{} takes fields {}, got {}".format(family, ", ".join(cls._fields), ", ".join(sorted(values))))
    spec = cls(**values)
    spec.validate()
    return spec


def generate(spec):
    spec.validate()
    assembly = spec.generate()
    logging.debug("Generated {}: {!r}".format(spec, assembly.graph))
    return assembly


def closed_form(spec):
    spec.validate()
    return spec.closed_form()


def census_prediction(spec):
    spec.validate()
    return spec.census_prediction()


def _grid_integer(value, what):
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidParameter("Grid {} must be an integer, got {!r}".format(what, value))
    return value


def _axis(field, value):
    if isinstance(value, dict):
        if set(value) != {'from', 'to'}:
            raise InvalidParameter("Range for {} takes exactly 'from' and 'to', got {}".format(
                field, ", ".join(sorted(map(str, value))) or "nothing"))
        low = _grid_integer(value['from'], "{}.from".format(field))
        high = _grid_integer(value['to'], "{}.to".format(field))
        return list(range(low, high + 1))
    values = value if isinstance(value, list) else [value]
    for v in values:
        if isinstance(v, (dict, list)):
            raise InvalidParameter("Values for {} must be scalars, got {!r}".format(field, v))
    return values


def expand_grid(config):
    """
    Expand a grid config, ``{"version": 1, "grid": [{"family": ..., <field>: axis}]}``,
    into specs. An axis is a single value, a list, or ``{"from": a, "to": b}``
    (inclusive). An omitted ``h`` for spiro and poly ranges over 1..q//2.
    Any malformed config raises InvalidParameter.
    """
    if not isinstance(config, dict):
        raise InvalidParameter("A grid config must be a JSON object, got {}".format(type(config).__name__))
    if config.get('version') != 1:
        raise InvalidParameter("Unsupported grid version {!r}".format(config.get('version')))
    grid = config.get('grid', [])
    if not isinstance(grid, list):
        raise InvalidParameter("'grid' must be a list of entries, got {!r}".format(grid))
    specs = []
    for entry in grid:
        if not isinstance(entry, dict):
            raise InvalidParameter("Grid entries must be objects, got {!r}".format(entry))
        entry = dict(entry)
        family = entry.pop('family', None)
        cls = FAMILIES.get(family) if isinstance(family, str) else None
        if cls is None:
            raise InvalidParameter("Unknown family {!r} in grid".format(family))
        fields = [f for f in cls._fields if not (f == 'h' and f not in entry)]
        missing = [f for f in fields if f not in entry]
        if missing:
            raise InvalidParameter("Grid entry for {} is missing {}".format(family, ", ".join(missing)))
        extra = sorted(set(entry) - set(cls._fields))
        if extra:
            raise InvalidParameter("Grid entry for {} has unknown fields {}".format(family, ", ".join(extra)))
        for combination in itertools.product(*[_axis(f, entry[f]) for f in fields]):
            values = dict(zip(fields, combination))
            if 'h' in cls._fields and 'h' not in values:
                for h in range(1, _grid_integer(values['q'], "q") // 2 + 1):
                    specs.append(build_spec(family, h=h, **values))
            else:
                specs.append(build_spec(family, **values))
    return specs
