from django.core.validators import MinValueValidator
from django.db import models
from django.utils import timezone

from apps.planarcode.services.records import hog_keyword
from apps.symmetry.services.point_group import POINT_GROUPS


class CensusRun(models.Model):
    PENDING = 'PENDING'
    PROCESSING = 'PROCESSING'
    SUCCESS = 'SUCCESS'
    FAILURE = 'FAILURE'

    STATUS_CHOICES = [
        (PENDING, 'Pending'),
        (PROCESSING, 'Processing'),
        (SUCCESS, 'Success'),
        (FAILURE, 'Failure'),
    ]

    n_min = models.IntegerField(validators=[MinValueValidator(20)])
    n_max = models.IntegerField(validators=[MinValueValidator(20)])
    # PIPs separated by ';', e.g. "12;11,1"; blank means every PIP
    pip_filter = models.CharField(max_length=255, blank=True, default='')
    min_cluster = models.IntegerField(null=True, blank=True)
    jobs = models.IntegerField(default=1, validators=[MinValueValidator(1)])
    status = models.CharField(
        max_length=20,
        choices=STATUS_CHOICES,
        default=PENDING
    )
    total_orders = models.IntegerField(null=True, blank=True)
    processed_orders = models.IntegerField(default=0)
    candidate_count = models.IntegerField(default=0)
    isomer_count = models.IntegerField(default=0)
    celery_task_id = models.CharField(max_length=255, null=True, blank=True)

    created_at = models.DateTimeField(default=timezone.now)
    started_at = models.DateTimeField(null=True, blank=True)
    finished_at = models.DateTimeField(null=True, blank=True)

    class Meta:
        db_table = 'census_runs'
        indexes = [
            models.Index(fields=['status'], name='census_runs_status_6f1c2a_idx'),
            models.Index(fields=['created_at'], name='census_runs_created_9b3e41_idx'),
            models.Index(fields=['celery_task_id'], name='census_runs_celery__4d7a10_idx'),
        ]
        ordering = ['-created_at']

    def __str__(self):
        return f'C{self.n_min}..C{self.n_max} [{self.pip_filter or "all"}] - {self.status}'

    @property
    def n_values(self):
        return list(range(self.n_min + self.n_min % 2, self.n_max + 1, 2))

    @property
    def partitions(self):
        if not self.pip_filter:
            return None
        return [tuple(int(p) for p in part.split(',')) for part in self.pip_filter.split(';')]

    @property
    def progress_percent(self):
        if self.total_orders and self.total_orders > 0:
            return round((self.processed_orders / self.total_orders) * 100, 2)
        return 0

    def mark_started(self):
        self.status = self.PROCESSING
        self.started_at = timezone.now()
        self.total_orders = len(self.n_values)
        self.processed_orders = 0
        self.save()

    def mark_completed(self, candidate_count, isomer_count):
        self.status = self.SUCCESS
        self.candidate_count = candidate_count
        self.isomer_count = isomer_count
        self.processed_orders = self.total_orders or 0
        self.finished_at = timezone.now()
        self.save()

    def mark_failed(self):
        self.status = self.FAILURE
        self.finished_at = timezone.now()
        self.save()


class IsomerRecord(models.Model):
    census = models.ForeignKey(
        CensusRun,
        on_delete=models.CASCADE,
        related_name='isomers'
    )
    n = models.IntegerField(validators=[MinValueValidator(20)])
    rank = models.IntegerField(validators=[MinValueValidator(1)])
    spiral = models.CharField(max_length=255)
    pip = models.CharField(max_length=64)
    separation = models.IntegerField(null=True, blank=True)
    point_group = models.CharField(max_length=8, choices=[(g, g) for g in POINT_GROUPS])
    pentagon_adjacencies = models.IntegerField(default=0)
    minimal_adjacency = models.BooleanField(default=False)
    hog_keyword = models.CharField(max_length=64, blank=True)
    created_at = models.DateTimeField(default=timezone.now)

    class Meta:
        db_table = 'isomer_records'
        constraints = [
            models.UniqueConstraint(fields=['census', 'n', 'rank'], name='unique_census_isomer'),
        ]
        indexes = [
            models.Index(fields=['census', 'pip'], name='isomer_reco_census__2e8c55_idx'),
        ]
        ordering = ['n', 'rank']

    def __str__(self):
        return f'{self.spiral_id} ({self.pip}, {self.point_group})'

    @property
    def spiral_id(self):
        return f'{self.n}:{self.rank}'

    def save(self, *args, **kwargs):
        if not self.hog_keyword:
            self.hog_keyword = hog_keyword(int(p) for p in self.pip.split(','))
        self.full_clean()
        super().save(*args, **kwargs)
