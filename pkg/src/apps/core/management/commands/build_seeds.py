import logging

from apps.clusters.classification import parse_partition
from apps.core.management.base import FullereneCommand
from apps.goldberg.services.seeds import build_seed_table

logger = logging.getLogger(__name__)


class Command(FullereneCommand):
    help = "Search a seed fullerene for every PIP with clusters of at most five pentagons and write the seed table"

    def add_arguments(self, parser):
        parser.add_argument('--pip', action='append', help="only these partitions (repeatable)")
        parser.add_argument('--n-max', type=int, help="largest order to search (defaults to SEED_SEARCH_N_MAX)")
        parser.add_argument('--seed-table', help="manifest to write (defaults to SEED_TABLE_PATH)")
        self.add_jobs_argument(parser)

    def handle(self, *args, **options):
        partitions = [parse_partition(text) for text in options['pip']] if options['pip'] else None
        manifest = build_seed_table(
            partitions,
            n_max=options['n_max'],
            path=options['seed_table'],
            jobs=self.check_jobs(options['jobs']),
        )
        for row in manifest['seeds']:
            self.stdout.write(f"{','.join(map(str, row['pip']))}\t{row['spiral']}")
