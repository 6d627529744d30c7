from django.core.management.base import CommandError

from apps.core.management.base import FullereneCommand
from apps.spirals.services.numbering import format_spiral_id, isomer_from_id, parse_spiral_id, spiral_id
from apps.spirals.services.spiral import canonical_spiral


class Command(FullereneCommand):
    help = "Spiral id (n:rank) of fullerenes given as a spiral or planar_code; --id goes the other way"

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        parser.add_argument('--id', help="print the canonical spiral of this spiral id")

    def handle(self, *args, **options):
        if options['id']:
            n, rank = self.parse_id(options['id'])
            self.stdout.write(str(canonical_spiral(isomer_from_id(n, rank))))
            return
        for _, F in self.input_graphs(options):
            self.stdout.write(format_spiral_id(*spiral_id(F)))

    def parse_id(self, text):
        try:
            return parse_spiral_id(text)
        except ValueError:
            raise CommandError(f"Malformed spiral id {text!r}")
