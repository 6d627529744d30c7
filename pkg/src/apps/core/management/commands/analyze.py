import sys

from apps.clusters.classification import parse_partition
from apps.clusters.services.clusters import pip
from apps.core.management.base import FullereneCommand
from apps.isomers.services.analysis import analyze_fullerene
from apps.isomers.services.generator import EXTERNAL, EnumerationTask, generate_isomers
from apps.planarcode.services.records import write_analysis_records


class Command(FullereneCommand):
    help = "Analyze fullerenes read as planar_code, one record per graph"

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='input', default='-', help="planar_code file, or '-' for stdin")
        parser.add_argument('--n', type=int, default=0, help="only graphs with this many vertices")
        parser.add_argument('--pip', action='append', default=[], help="keep only these PIPs, e.g. 9,3")
        parser.add_argument('--extended', action='store_true', help="accept the 2-byte planar_code extension")
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        wanted = {parse_partition(text) for text in options['pip']}
        stream = self.open_input(options['input'], options.get('stdin'))
        task = EnumerationTask(
            n=options['n'],
            mode=EXTERNAL,
            source=stream,
            filters=[lambda F: pip(F) in wanted] if wanted else [],
            extended=options['extended'],
        )
        try:
            # one graph in memory at a time
            for F in generate_isomers(task):
                self.write_bytes(write_analysis_records([analyze_fullerene(F)], options['format']))
        finally:
            if stream is not options.get('stdin') and stream is not sys.stdin.buffer:
                stream.close()
