import logging

from django.core.management.base import CommandError

from apps.clusters.classification import parse_partition
from apps.core.management.base import FullereneCommand
from apps.goldberg.services.inflation import goldberg_5_0
from apps.goldberg.services.replacement import inflate_preserving_clusters
from apps.goldberg.services.seeds import seed_fullerene_for_partition
from apps.isomers.services.analysis import analyze_fullerene
from apps.planarcode.services.codec import PlanarCodeWriter
from apps.planarcode.services.records import write_analysis_records

logger = logging.getLogger(__name__)


class Command(FullereneCommand):
    help = "Goldberg (5,0) inflation, optionally putting every pentagon cluster back after each round"

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        parser.add_argument('--pip', help="start from the seed fullerene with this PIP")
        parser.add_argument('--seed-table', help="seed table manifest (defaults to SEED_TABLE_PATH)")
        parser.add_argument('--rounds', type=int, default=1)
        parser.add_argument('--plain', action='store_true', help="inflate only; clusters are pulled apart")
        parser.add_argument('--out', help="write the results as planar_code to this file")
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        rounds = options['rounds']
        if rounds < 1:
            raise CommandError(f"--rounds must be at least 1, got {rounds}")
        if options['pip']:
            if options['graph'] or options['input']:
                raise CommandError("Give either --pip or an input graph, not both")
            seed = seed_fullerene_for_partition(parse_partition(options['pip']), path=options['seed_table'])
            sources = [seed]
        else:
            sources = (F for _, F in self.input_graphs(options))

        writer = None
        stream = open(options['out'], 'wb') if options['out'] else None
        try:
            if stream is not None:
                writer = PlanarCodeWriter(stream, extended=True)
            for F in sources:
                result = self.inflate(F, rounds, options['plain'])
                if writer is not None:
                    writer.write(result.graph)
                else:
                    self.write_bytes(write_analysis_records([analyze_fullerene(result)], options['format']))
        finally:
            if stream is not None:
                stream.close()

    def inflate(self, F, rounds, plain):
        if not plain:
            return inflate_preserving_clusters(F, rounds)
        for _ in range(rounds):
            F, _ = goldberg_5_0(F)
        return F
