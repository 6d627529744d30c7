import logging
from datetime import timedelta
from typing import Iterator

from celery import group, shared_task
from django.db import transaction
from django.utils import timezone

from .models import CensusRun, IsomerRecord
from .services import generator
from .services.census import census
from apps.planarcode.services.records import format_pip
from apps.spirals.services.spiral import SpiralCode

logger = logging.getLogger(__name__)


@shared_task(bind=True, max_retries=3, default_retry_delay=60)
def run_census(self, census_id: int) -> None:

    try:
        run = CensusRun.objects.get(id=census_id)

        if run.status in [CensusRun.SUCCESS, CensusRun.FAILURE]:
            logger.info(f"Census {census_id} already completed with status: {run.status}")
            return

        run.mark_started()
        run.celery_task_id = self.request.id
        run.save()

        logger.info(
            f"Starting census {census_id} for n in [{run.n_min}, {run.n_max}]"
            f" (attempt {self.request.retries + 1})"
        )

        # more than one job fans the work chunks out to the worker pool
        spirals = distributed_spirals if run.jobs > 1 else generator.canonical_spirals

        candidates = 0
        matched = 0
        for n in run.n_values:
            table = census(
                [n], pips=run.partitions, min_cluster=run.min_cluster, jobs=run.jobs,
                progress=False, spirals=spirals,
            )
            with transaction.atomic():
                IsomerRecord.objects.filter(census=run, n=n).delete()
                for partition in table.partitions():
                    for entry in table.rows[partition]:
                        _save_entry(run, entry)
            candidates += table.candidates
            matched += table.isomer_count
            run.processed_orders += 1
            run.save(update_fields=['processed_orders'])

        run.mark_completed(candidates, matched)

        logger.info(
            f"Completed census {census_id}. "
            f"Candidates: {candidates}, Isomers: {matched}"
        )

    except CensusRun.DoesNotExist:
        logger.error(f"CensusRun {census_id} not found")
        raise
    except Exception as exc:
        logger.error(f"Failed to run census {census_id}: {exc}")

        # the run stays PROCESSING while a retry is pending
        if not self.request.called_directly and self.request.retries < self.max_retries:
            retry_delay = self.default_retry_delay * (2 ** self.request.retries)
            raise self.retry(exc=exc, countdown=retry_delay)

        logger.error(f"Giving up on census {census_id} after {self.request.retries} retries")
        try:
            run = CensusRun.objects.get(id=census_id)
            run.mark_failed()
        except CensusRun.DoesNotExist:
            pass
        raise


def distributed_spirals(n: int, jobs: int) -> Iterator[SpiralCode]:
    """Canonical spirals of C_n computed by ``enumerate_chunk`` tasks, merged in chunk order."""
    keys = generator.chunk_keys(n)
    logger.debug(f"Dispatching {len(keys)} chunks for C{n}")
    result = group(enumerate_chunk.s(n, first, second) for first, second in keys).apply_async()
    # group results come back in signature order, whatever order the workers finish in
    for chunk in result.get(disable_sync_subtasks=False):
        for positions in chunk:
            yield SpiralCode(n, tuple(positions))


def _save_entry(run: CensusRun, entry) -> IsomerRecord:
    record = entry.record
    return IsomerRecord.objects.create(
        census=run,
        n=record.n,
        rank=entry.rank,
        spiral=entry.spiral_text,
        pip=format_pip(record.pip),
        separation=record.separation,
        point_group=record.group,
        pentagon_adjacencies=record.pentagon_adjacencies,
        minimal_adjacency=entry.minimal_adjacency,
        hog_keyword=record.hog_keyword,
    )


@shared_task
def enumerate_chunk(n: int, first: int, second: int) -> list:
    """Canonical pentagon positions of one work partition, as JSON-friendly lists."""
    return [list(positions) for positions in generator.enumerate_chunk(n, (first, second))]


@shared_task
def cleanup_finished_censuses(days_old: int = 7) -> None:

    cutoff_date = timezone.now() - timedelta(days=days_old)

    old_runs = CensusRun.objects.filter(
        status__in=[CensusRun.SUCCESS, CensusRun.FAILURE],
        created_at__lt=cutoff_date
    )

    deleted_count = 0
    for run in old_runs:
        try:
            # cascades to IsomerRecord
            run.delete()
            deleted_count += 1
        except Exception as exc:
            logger.error(f"Failed to cleanup census {run.id}: {exc}")

    logger.info(f"Cleaned up {deleted_count} old censuses")
