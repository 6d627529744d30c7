import logging

from django.core.management.base import CommandError

from apps.core.management.base import FullereneCommand
from apps.isomers.services.generator import canonical_spirals, is_fullerene_order
from apps.planarcode.services.codec import PlanarCodeWriter
from apps.spirals.services.numbering import format_spiral_id
from apps.spirals.services.spiral import wind_from_spiral

logger = logging.getLogger(__name__)


class Command(FullereneCommand):
    help = "List every C_n isomer in spiral-id order"

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--n-max', type=int, help="generate every order from --n up to this one")
        parser.add_argument('--format', choices=('spiral', 'planar_code'), default='spiral')
        parser.add_argument('--out', help="planar_code output file (required with --format planar_code)")
        self.add_jobs_argument(parser)

    def handle(self, *args, **options):
        jobs = self.check_jobs(options['jobs'])
        n_max = options['n_max'] or options['n']
        if options['n'] < 20 or n_max < options['n']:
            raise CommandError(f"Bad order range {options['n']}..{n_max}")
        orders = [n for n in range(options['n'], n_max + 1) if is_fullerene_order(n)]

        if options['format'] == 'planar_code':
            if not options['out']:
                raise CommandError("--format planar_code needs --out FILE")
            with open(options['out'], 'wb') as stream:
                writer = PlanarCodeWriter(stream)
                count = 0
                for n in orders:
                    for code in canonical_spirals(n, jobs):
                        writer.write(wind_from_spiral(code).graph)
                        count += 1
            logger.info(f"Wrote {count} isomers to {options['out']}")
            return

        for n in orders:
            for rank, code in enumerate(canonical_spirals(n, jobs), start=1):
                self.stdout.write(f'{format_spiral_id(n, rank)}\t{code}')
