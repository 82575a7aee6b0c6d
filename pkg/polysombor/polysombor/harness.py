"""
Verification campaigns.

``verify_families`` re-derives every family's closed form and edge census
from generated graphs. ``verify_bounds`` fuzzes seeded random polymers and
checks the universal inequalities on each. Failed checks become report
records; nothing here raises for a failed check.
"""
import collections
import json
import logging as logmodule

from django.conf import settings

from polysombor import constructions, families, graphs
from polysombor.constructions import CONVENTIONS, RootedUnit
from polysombor.graphs import InvalidParameter
from polysombor.radicals import EQUAL, GREATER, INCONCLUSIVE, LESS, cmp_numeric, eq_exact, eval_float
from polysombor.serializers import ReportRecordSerializer, render_json
from polysombor.sombor import (NOT_APPLICABLE, block_sum_bound_holds, deletion_bound_holds,
                               monomer_sum_bound_holds, sombor_from_census, sombor_index)
from polysombor.utils.logging import trace
from polysombor.utils.parser import parse_unit_name
from polysombor.utils.splitmix import SplitMix64

logging = logmodule.getLogger(__name__)

EXACT_PASS = 'exact-pass'
NUMERIC_PASS = 'numeric-pass'
FAIL = 'fail'
INCONCLUSIVE_STATUS = 'inconclusive'
STATUSES = (EXACT_PASS, NUMERIC_PASS, FAIL, NOT_APPLICABLE, INCONCLUSIVE_STATUS)

OPERATORS = (constructions.LINK, constructions.CHAIN, constructions.CIRCUIT, constructions.BOUQUET,
             constructions.POLYMER)


class ReportRecord(collections.namedtuple('ReportRecord', ['case', 'check', 'status', 'lhs', 'rhs', 'gap'])):
    __slots__ = ()

    @classmethod
    def build(cls, case, check, status, lhs, rhs):
        return cls(str(case), check, status, lhs, rhs, eval_float(lhs - rhs))


class VerificationReport(object):
    def __init__(self, records=None):
        self.records = list(records or [])

    def add(self, record):
        if record.status == FAIL:
            logging.warning("{} failed {}: {} vs {}".format(record.case, record.check, record.lhs, record.rhs))
        self.records.append(record)

    def extend(self, records):
        for record in records:
            self.add(record)

    @property
    def failures(self):
        return [record for record in self.records if record.status == FAIL]

    def counts(self):
        counts = collections.Counter(record.status for record in self.records)
        return collections.OrderedDict((status, counts[status]) for status in STATUSES)

    def summary(self):
        return "{} checks: {}".format(
            len(self.records), ", ".join("{} {}".format(count, status) for status, count in self.counts().items()))

    def jsonl_lines(self):
        for record in self.records:
            yield render_json(ReportRecordSerializer(record).data)

    def write_jsonl(self, stream):
        for line in self.jsonl_lines():
            stream.write(line)
            stream.write("\n")

    def __len__(self):
        return len(self.records)


def _ordering_status(ordering, expected):
    if ordering == expected:
        return NUMERIC_PASS
    if ordering == INCONCLUSIVE:
        return INCONCLUSIVE_STATUS
    return FAIL


def _bound_status(report, expected):
    if report.ordering == NOT_APPLICABLE:
        return NOT_APPLICABLE
    return _ordering_status(report.ordering, expected)


def check_family(spec):
    """Closed-form and census records for one family spec."""
    assembly = families.generate(spec)
    records = []

    observed = sombor_index(assembly.graph)
    expected = families.closed_form(spec)
    records.append(ReportRecord.build(spec, 'closed-form', EXACT_PASS if eq_exact(observed, expected) else FAIL,
                                      observed, expected))

    census = graphs.edge_census(assembly.graph)
    predicted = families.census_prediction(spec)
    lhs, rhs = sombor_from_census(census), sombor_from_census(predicted)
    records.append(ReportRecord.build(spec, 'census', EXACT_PASS if census == predicted and eq_exact(lhs, rhs) else FAIL,
                                      lhs, rhs))

    if getattr(spec, 'h', None) == 1 and getattr(spec, 'k', None) == 1:
        # adjacent-contact formulas start at two units
        records.append(ReportRecord.build(spec, 'closed-form-h1', NOT_APPLICABLE, observed, expected))
    return records


@trace
def verify_families(grid):
    report = VerificationReport()
    logging.info("Verifying {} family specs".format(len(grid)))
    for spec in grid:
        report.extend(check_family(spec))
    logging.info(report.summary())
    return report


def load_grid(path=None):
    """Specs of a grid config file; the default grid when ``path`` is None."""
    path = path or settings.SOMBOR_DEFAULT_GRID
    with open(path) as f:
        try:
            config = json.load(f)
        except ValueError as e:
            raise InvalidParameter("Grid file {} is not valid JSON: {}".format(path, e))
    return families.expand_grid(config)


class RandomPolymerSpec(collections.namedtuple('RandomPolymerSpec',
                                               ['seed', 'unit_pool', 'unit_count_range', 'operator'])):
    __slots__ = ()

    @classmethod
    def from_settings(cls, seed, operator):
        pool = list(settings.SOMBOR_UNIT_POOL)
        if operator == constructions.CIRCUIT:
            pool += list(settings.SOMBOR_CIRCUIT_EXTRA_UNITS)
        spec = cls(seed, tuple(pool), tuple(settings.SOMBOR_UNIT_COUNT_RANGE), operator)
        spec.validate()
        return spec

    def validate(self):
        if not 0 <= self.seed < 2 ** 64:
            raise InvalidParameter("Seed must be a 64-bit unsigned integer, got {}".format(self.seed))
        if self.operator not in OPERATORS:
            raise InvalidParameter("Unknown operator {!r}, expected one of {}".format(self.operator, ", ".join(OPERATORS)))
        low, high = self.unit_count_range
        if not 1 <= low <= high:
            raise InvalidParameter("Bad unit count range {}".format(self.unit_count_range))
        if not self.pool_graphs():
            raise InvalidParameter("Unit pool has no usable unit for {}".format(self.operator))

    def pool_graphs(self):
        pool = [(name, parse_unit_name(name)) for name in self.unit_pool]
        if self.operator in (constructions.LINK, constructions.CHAIN):
            # two-contact units need two vertices
            pool = [(name, g) for name, g in pool if g.vertex_count >= 2]
        return pool


Instance = collections.namedtuple('Instance', ['case', 'assembly'])


def random_instance(spec, index, pool=None):
    """Instance ``index`` of the campaign; depends only on the spec and the index."""
    rng = SplitMix64.for_instance(spec.seed, index)
    pool = pool or spec.pool_graphs()
    low, high = spec.unit_count_range
    if spec.operator == constructions.CIRCUIT:
        low, high = max(low, 3), max(high, 3)
    count = low + rng.randbelow(high - low + 1)
    two_contacts = spec.operator in (constructions.LINK, constructions.CHAIN)

    units = []
    labels = []
    for _ in range(count):
        name, g = rng.choice(pool)
        x = rng.randbelow(g.vertex_count)
        y = None
        if two_contacts:
            y = (x + 1 + rng.randbelow(g.vertex_count - 1)) % g.vertex_count
            labels.append("{}@{}-{}".format(name, x, y))
        else:
            labels.append("{}@{}".format(name, x))
        units.append(RootedUnit(g, x, y))

    if spec.operator == constructions.POLYMER:
        anchors = []
        for i in range(1, count):
            j = rng.randbelow(i)
            anchors.append((j, rng.randbelow(units[j].graph.vertex_count)))
        assembly = constructions.point_attach(units, anchors)
        labels = [label if i == 0 else "{}>{}:{}".format(label, *anchors[i - 1]) for i, label in enumerate(labels)]
    else:
        assembly = getattr(constructions, spec.operator)(units)
    return Instance("{}#{}[{}]".format(spec.operator, index, ",".join(labels)), assembly)


OPERATOR_BOUNDS = {
    constructions.LINK: [('link-bound', constructions.link_lower_bound)],
    constructions.CHAIN: [('chain-bound-i', constructions.chain_lower_bound_i),
                          ('chain-bound-ii', constructions.chain_lower_bound_ii)],
    constructions.CIRCUIT: [('circuit-bound-deg', constructions.circuit_lower_bound_deg)],
    constructions.BOUQUET: [('bouquet-bound', constructions.bouquet_lower_bound)],
    constructions.POLYMER: [],
}


def check_instance(instance):
    case, assembly = instance
    g = assembly.graph
    so_g = sombor_index(g)
    records = []

    report = monomer_sum_bound_holds(g, assembly.monomers(), so_g=so_g)
    records.append(ReportRecord.build(case, 'monomer-sum', _bound_status(report, GREATER), report.lhs, report.rhs))
    report = block_sum_bound_holds(g, so_g=so_g)
    records.append(ReportRecord.build(case, 'block-sum', _bound_status(report, GREATER), report.lhs, report.rhs))

    for u, v in g.sorted_edges():
        report = deletion_bound_holds(g, u, v, so_g=so_g)
        records.append(ReportRecord.build(case, 'edge-deletion[{}-{}]'.format(u, v),
                                          _ordering_status(report.ordering, LESS), report.lhs, report.rhs))

    units = assembly.units
    applicable = len(units) >= 2 and all(unit.graph.edge_count for unit in units)
    for name, bound in OPERATOR_BOUNDS[assembly.operator]:
        for convention in CONVENTIONS:
            check = '{}[{}]'.format(name, convention)
            if not applicable:
                records.append(ReportRecord.build(case, check, NOT_APPLICABLE, so_g, so_g))
                continue
            rhs = bound(assembly, units, convention)
            records.append(ReportRecord.build(case, check, _ordering_status(cmp_numeric(so_g, rhs), GREATER), so_g, rhs))

    if assembly.operator == constructions.CIRCUIT:
        rhs = constructions.circuit_lower_bound_2k(units)
        ordering = cmp_numeric(so_g, rhs)
        if not any(unit.graph.edge_count for unit in units):
            status = EXACT_PASS if eq_exact(so_g, rhs) else FAIL
        elif ordering == EQUAL:
            status = FAIL
        else:
            status = _ordering_status(ordering, GREATER)
        records.append(ReportRecord.build(case, 'circuit-bound-2k', status, so_g, rhs))
    return records


@trace
def verify_bounds(spec, count):
    spec.validate()
    if count < 0:
        raise InvalidParameter("Instance count must be nonnegative, got {}".format(count))
    logging.info("Fuzzing {} {} instances with seed {}".format(count, spec.operator, spec.seed))
    pool = spec.pool_graphs()
    report = VerificationReport()
    for index in range(count):
        instance = random_instance(spec, index, pool)
        logging.debug("Checking {}".format(instance.case))
        report.extend(check_instance(instance))
    logging.info("{}: {}".format(spec.operator, report.summary()))
    return report
