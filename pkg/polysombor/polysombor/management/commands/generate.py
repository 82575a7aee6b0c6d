import argparse
import logging as logmodule

from django.core.management.base import BaseCommand

from polysombor import families
from polysombor.utils.files import write_text
from polysombor.utils.parser import FamilySpecError, parse_family_spec, write_edge_list

logging = logmodule.getLogger(__name__)


def family_spec(text):
    try:
        return parse_family_spec(text)
    except FamilySpecError as e:
        raise argparse.ArgumentTypeError(str(e))


class Command(BaseCommand):
    help = "Generate a named polymer family member as an edge list."

    def add_arguments(self, parser):
        parser.add_argument('--family', type=family_spec, required=True,
                            help="e.g. q:m=5,n=4, spiro:q=6,h=2,k=8, cactus:name=Qn,n=5, d3:n=2")
        parser.add_argument('--out', dest='out', default=None, help="edge-list file; standard output if omitted")

    def handle(self, *args, **options):
        spec = options['family']
        assembly = families.generate(spec)
        text = write_edge_list(assembly.graph, comment=str(spec))
        if options['out'] is None:
            self.stdout.write(text, ending='')
            return
        write_text(options['out'], text)
        logging.info("Wrote {} ({} vertices, {} edges) to {}".format(
            spec, assembly.graph.vertex_count, assembly.graph.edge_count, options['out']))
