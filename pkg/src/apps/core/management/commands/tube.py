from apps.core.management.base import FullereneCommand
from apps.goldberg.services.tubes import tube_rings, tube_spiral
from apps.isomers.services.analysis import analyze_fullerene
from apps.planarcode.services.records import write_analysis_records


class Command(FullereneCommand):
    help = "Tube fullerenes with two six-pentagon caps"

    def add_arguments(self, parser):
        parser.add_argument('--rings', type=int, required=True, help="hexagon rings between the caps")
        parser.add_argument('--spiral', action='store_true', help="print the spiral instead of the analysis")
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        if options['spiral']:
            self.stdout.write(str(tube_spiral(options['rings'])))
            return
        F, _ = tube_rings(options['rings'])
        self.write_bytes(write_analysis_records([analyze_fullerene(F)], options['format']))
