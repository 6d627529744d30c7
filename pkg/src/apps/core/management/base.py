import sys
from typing import BinaryIO, Iterator, Optional, Tuple

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.core.graph import FullereneGraph, validate_fullerene
from apps.planarcode.services.codec import PlanarCodeReader
from apps.planarcode.services.records import FORMATS
from apps.spirals.services.numbering import format_spiral_id, isomer_from_id, parse_spiral_id
from apps.spirals.services.spiral import SpiralCode, wind_from_spiral


class FullereneCommand(BaseCommand):
    """Base for the pentaclusters commands.

    Results go to ``self.stdout``; logging and progress go to stderr. ``stdin``
    may be handed in by :func:`apps.core.cli.run` in place of the process's own.
    """

    requires_system_checks = []
    stealth_options = ('stdin',)

    def add_input_arguments(self, parser) -> None:
        parser.add_argument('graph', nargs='?', help="spiral id ('40:39') or spiral ('40: 1 2 ...')")
        parser.add_argument('--in', dest='input', help="planar_code file, or '-' for stdin")

    def add_format_argument(self, parser) -> None:
        parser.add_argument('--format', choices=FORMATS, default='tsv')

    def add_jobs_argument(self, parser) -> None:
        parser.add_argument('--jobs', type=int, default=settings.CENSUS_DEFAULT_JOBS)

    def check_jobs(self, jobs: int) -> int:
        if jobs < 1:
            raise CommandError(f"--jobs must be at least 1, got {jobs}")
        return jobs

    def open_input(self, name: str, stdin: Optional[BinaryIO] = None) -> BinaryIO:
        if name == '-':
            return stdin if stdin is not None else sys.stdin.buffer
        try:
            return open(name, 'rb')
        except OSError as exc:
            raise CommandError(f"Cannot open {name}: {exc.strerror}")

    def input_graphs(self, options) -> Iterator[Tuple[Optional[str], FullereneGraph]]:
        """``(spiral id or None, graph)`` for the positional graph or each record of ``--in``."""
        if options.get('graph') and options.get('input'):
            raise CommandError("Give either a graph or --in, not both")
        text = options.get('graph')
        if text:
            yield graph_from_text(text)
            return
        if not options.get('input'):
            raise CommandError("No input: give a spiral id, a spiral or --in FILE")
        stream = self.open_input(options['input'], options.get('stdin'))
        try:
            for graph in PlanarCodeReader(stream):
                yield None, validate_fullerene(graph)
        finally:
            if stream is not options.get('stdin') and stream is not sys.stdin.buffer:
                stream.close()

    def write_bytes(self, data: bytes) -> None:
        self.stdout.write(data.decode('utf-8'), ending='')


def graph_from_text(text: str) -> Tuple[Optional[str], FullereneGraph]:
    """Wind a spiral (``'40: 1 2 ...'``) or look up a spiral id (``'40:39'``)."""
    head, _, tail = text.partition(':')
    if len(tail.replace(',', ' ').split()) > 1:
        return None, wind_from_spiral(SpiralCode.parse(text))
    try:
        n, rank = parse_spiral_id(text)
    except ValueError:
        raise CommandError(f"{text!r} is neither a spiral id nor a spiral")
    return format_spiral_id(n, rank), isomer_from_id(n, rank)
