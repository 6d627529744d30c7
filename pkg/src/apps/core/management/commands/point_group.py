from apps.core.management.base import FullereneCommand
from apps.symmetry.services.point_group import point_group


class Command(FullereneCommand):
    help = "Point group of fullerenes given as a spiral id, a spiral or planar_code"

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        parser.add_argument('--axes', action='store_true', help="also list the rotation axes by order")

    def handle(self, *args, **options):
        for sid, F in self.input_graphs(options):
            group = point_group(F)
            line = group.name if sid is None else f'{sid}\t{group.name}'
            if options['axes']:
                axes = ' '.join(f'C{order}x{count}' for order, count in group.axes)
                line += f'\t{axes}'
            self.stdout.write(line)
