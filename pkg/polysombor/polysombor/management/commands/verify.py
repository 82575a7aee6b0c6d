import logging as logmodule
import os

from django.core.management.base import BaseCommand, CommandError

from polysombor import harness
from polysombor.graphs import InvalidParameter
from polysombor.utils.files import default_report_path, write_text

logging = logmodule.getLogger(__name__)

FAMILIES = 'families'
BOUNDS = 'bounds'


class Command(BaseCommand):
    help = "Run a verification campaign: 'families' checks closed forms and censuses, 'bounds' fuzzes the inequalities."

    def add_arguments(self, parser):
        parser.add_argument('campaign', choices=(FAMILIES, BOUNDS))
        parser.add_argument('--grid', dest='grid', default='default', help="'default' or a grid JSON file (families)")
        parser.add_argument('--seed', type=int, dest='seed', default=42, help="64-bit PRNG seed (bounds)")
        parser.add_argument('--count', type=int, dest='count', default=1000, help="instances per operator (bounds)")
        parser.add_argument('--op', dest='op', choices=harness.OPERATORS, default=None,
                            help="operator to fuzz; every operator if omitted (bounds)")
        parser.add_argument('--report', dest='report', default=None, help="JSON-lines report file")

    def handle(self, *args, **options):
        try:
            if options['campaign'] == FAMILIES:
                report, default_path = self.verify_families(options['grid'])
            else:
                report, default_path = self.verify_bounds(options['seed'], options['count'], options['op'])
        except (InvalidParameter, OSError) as e:
            raise CommandError(str(e), returncode=2)

        path = options['report'] or default_path
        write_text(path, "".join(line + "\n" for line in report.jsonl_lines()))
        logging.info("Report written to {}".format(path))

        self.stdout.write(report.summary())
        failures = report.failures
        if failures:
            for record in failures[:20]:
                self.stderr.write("FAIL {} {}: gap {!r}".format(record.case, record.check, record.gap))
            raise CommandError("{} checks failed, see {}".format(len(failures), path), returncode=1)

    def verify_families(self, grid):
        if grid == 'default':
            specs = harness.load_grid()
        else:
            specs = harness.load_grid(grid)
        name = os.path.splitext(os.path.basename(grid))[0]
        return harness.verify_families(specs), default_report_path(FAMILIES, name)

    def verify_bounds(self, seed, count, op):
        operators = [op] if op else list(harness.OPERATORS)
        report = harness.VerificationReport()
        for operator in operators:
            spec = harness.RandomPolymerSpec.from_settings(seed, operator)
            report.records.extend(harness.verify_bounds(spec, count).records)
        return report, default_report_path(BOUNDS, "seed{}".format(seed), "count{}".format(count), op or "all")
