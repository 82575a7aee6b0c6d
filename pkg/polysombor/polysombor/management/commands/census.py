from django.core.management.base import BaseCommand

from polysombor.graphs import edge_census
from polysombor.utils.files import load_graph


class Command(BaseCommand):
    help = "Print the degree-pair edge census of an edge-list graph."

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='infile', required=True)

    def handle(self, *args, **options):
        census = edge_census(load_graph(options['infile']))
        for (a, b), count in census.items_sorted():
            self.stdout.write("{{{},{}}}: {}".format(a, b, count))
        self.stdout.write("total: {}".format(census.edge_total))
