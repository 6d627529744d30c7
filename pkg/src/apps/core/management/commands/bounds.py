from django.core.management.base import CommandError

from apps.core.management.base import FullereneCommand
from apps.patches.services.bounds import (
    FORMULA_NOTE,
    max_hexagons_in_patch,
    max_hexagons_with_cluster,
    max_vertices_with_cluster,
    min_boundary_length,
)


class Command(FullereneCommand):
    help = "Boundary-length bounds for patches and size bounds for big pentagon clusters"

    def add_arguments(self, parser):
        parser.add_argument('--cluster', type=int, help="largest fullerene with a cluster of this size (7..12)")
        parser.add_argument('--p', type=int, help="pentagons in the patch (0..5)")
        parser.add_argument('--h', type=int, help="hexagons in the patch: print the least boundary length")
        parser.add_argument('--b', type=int, help="boundary length: print the most hexagons")

    def handle(self, *args, **options):
        if options['cluster'] is not None:
            k = options['cluster']
            self.stdout.write(
                f'max hexagons {max_hexagons_with_cluster(k)}, max vertices {max_vertices_with_cluster(k)}'
            )
            return
        p = options['p']
        if p is None or (options['h'] is None) == (options['b'] is None):
            raise CommandError("Give --cluster K, or --p with exactly one of --h and --b")
        if options['h'] is not None:
            self.stdout.write(f"min boundary {min_boundary_length(p, options['h'])}")
        else:
            self.stdout.write(f"max hexagons {max_hexagons_in_patch(p, options['b'])}")
        if p == 2:
            self.stderr.write(FORMULA_NOTE)
