from django.core.management.base import BaseCommand

from polysombor.graphs import edge_census
from polysombor.radicals import eval_float, format_radical
from polysombor.serializers import RadicalSumSerializer, render_json, serialize_census
from polysombor.sombor import sombor_index
from polysombor.utils.files import load_graph


class Command(BaseCommand):
    help = "Print the exact Sombor index of an edge-list graph and its float value."

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='infile', required=True)
        parser.add_argument('--json', action='store_true', dest='json', default=False)

    def handle(self, *args, **options):
        g = load_graph(options['infile'])
        so = sombor_index(g)
        if options['json']:
            self.stdout.write(render_json({
                'sombor': RadicalSumSerializer(so).data,
                'census': serialize_census(edge_census(g)),
            }))
        else:
            self.stdout.write(u"{} ≈ {:.12g}".format(format_radical(so), eval_float(so)))
