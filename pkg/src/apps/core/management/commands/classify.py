from django.core.management.base import CommandError

from apps.clusters.classification import classify_partition, class_summary, parse_partition, partitions_of_12
from apps.core.management.base import FullereneCommand
from apps.planarcode.services.records import HOG_PREFIX, format_pip, pip_from_hog_keyword


class Command(FullereneCommand):
    help = "Class of a pentagonal incidence partition (impossible, finite, bounded or unbounded)"

    def add_arguments(self, parser):
        parser.add_argument('partition', nargs='?', help="e.g. 9,2,1 or pentagon_cluster_9_2_1")
        parser.add_argument('--all', action='store_true', help="classify every partition of 12")
        parser.add_argument('--summary', action='store_true', help="count partitions per class")

    def handle(self, *args, **options):
        if options['summary']:
            for bucket, counts in class_summary().items():
                line = ' '.join(f'{label}={counts[label]}' for label in sorted(counts))
                self.stdout.write(f'{bucket}\t{line}')
            return
        if options['all']:
            for partition in partitions_of_12():
                self.stdout.write(f'{format_pip(partition)}\t{classify_partition(partition).describe()}')
            return
        text = options['partition']
        if not text:
            raise CommandError("Give a partition, --all or --summary")
        partition = pip_from_hog_keyword(text) if text.startswith(HOG_PREFIX) else parse_partition(text)
        self.stdout.write(classify_partition(partition).describe())
