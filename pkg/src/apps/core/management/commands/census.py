import logging

from django.core.management.base import CommandError

from apps.clusters.classification import parse_partition
from apps.core.management.base import FullereneCommand
from apps.isomers.models import CensusRun
from apps.isomers.services.census import census
from apps.isomers.tasks import run_census
from apps.planarcode.services.records import format_pip, write_analysis_records

logger = logging.getLogger(__name__)


class Command(FullereneCommand):
    help = "Census of C_n isomers by pentagonal incidence partition"

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, help="smallest order (alone: only this order)")
        parser.add_argument('--n-max', type=int, help="largest order")
        parser.add_argument('--pip', action='append', default=[], help="keep only these PIPs, e.g. 11,1")
        parser.add_argument('--min-cluster', type=int, help="keep isomers whose largest cluster is at least this")
        parser.add_argument('--compare', action='store_true', help="diff each PIP against the recorded isomer lists")
        parser.add_argument('--queue', action='store_true', help="run as a background census instead")
        parser.add_argument('--no-progress', action='store_true')
        self.add_format_argument(parser)
        self.add_jobs_argument(parser)

    def handle(self, *args, **options):
        jobs = self.check_jobs(options['jobs'])
        n_min, n_max = self.order_range(options['n'], options['n_max'])
        pips = [parse_partition(text) for text in options['pip']]

        if options['queue']:
            run = CensusRun.objects.create(
                n_min=n_min,
                n_max=n_max,
                pip_filter=';'.join(format_pip(p) for p in pips),
                min_cluster=options['min_cluster'],
                jobs=jobs,
            )
            result = run_census.delay(run.id)
            logger.info(f"Queued census {run.id} as task {result.id}")
            self.stdout.write(str(run.id))
            return

        table = census(
            range(n_min, n_max + 1),
            pips=pips or None,
            min_cluster=options['min_cluster'],
            jobs=jobs,
            progress=not options['no_progress'],
        )
        self.write_bytes(write_analysis_records(table.records(), options['format']))

        if options['compare']:
            for partition in pips or table.partitions():
                diff = table.compare(partition)
                status = 'matches' if not any(diff.values()) else 'differs'
                self.stderr.write(f"{format_pip(partition)}: {status} {diff}")

    def order_range(self, n, n_max):
        if n is None and n_max is None:
            raise CommandError("Give --n, --n-max or both")
        if n_max is None:
            n_max = n
        if n is None:
            n = 20
        if n < 20 or n_max < n:
            raise CommandError(f"Bad order range {n}..{n_max}")
        return n, n_max
