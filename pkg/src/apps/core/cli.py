"""Command-line entry point.

``pentaclusters <command> [flags]`` dispatches to the management command of
the same name (dashes become underscores) and turns failures into exit codes:
0 on success, 1 for usage errors, 2 when the input data is invalid or a
computation cannot be carried out.
"""
import logging
import os
import sys
from typing import BinaryIO, List, Optional, TextIO

from django.core.exceptions import ValidationError
from django.core.management import call_command
from django.core.management.base import CommandError

from apps.core.exceptions import PentaclusterError, error_message

logger = logging.getLogger(__name__)

COMMANDS = (
    'generate',
    'analyze',
    'census',
    'classify',
    'bounds',
    'inflate',
    'tube',
    'spiral-id',
    'point-group',
    'build-seeds',
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

USAGE = 'usage: pentaclusters {' + ','.join(COMMANDS) + '} [options]'


def run(
    argv: List[str],
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    stdin: Optional[BinaryIO] = None,
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in COMMANDS:
        stderr.write(USAGE + '\n')
        return EXIT_USAGE
    name = argv[0].replace('-', '_')
    extra = {'stdin': stdin} if stdin is not None else {}
    try:
        call_command(name, *argv[1:], stdout=stdout, stderr=stderr, **extra)
    except SystemExit as exc:
        # --help
        return exc.code or EXIT_OK
    except CommandError as exc:
        stderr.write(f'{argv[0]}: {exc}\n')
        return EXIT_USAGE
    except (ValidationError, PentaclusterError) as exc:
        logger.debug(f"{argv[0]} failed", exc_info=True)
        stderr.write(f'{argv[0]}: {error_message(exc)}\n')
        return EXIT_DATA
    return EXIT_OK


def main() -> None:
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'pentaclusters.settings.dev')
    import django

    django.setup()
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
