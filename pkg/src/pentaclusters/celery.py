import os
from celery import Celery

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'pentaclusters.settings.dev')

app = Celery('pentaclusters')

app.config_from_object('django.conf:settings', namespace='CELERY')

app.autodiscover_tasks()

app.conf.update(
    task_serializer='json',
    accept_content=['json'],
    result_serializer='json',
    timezone='UTC',
    enable_utc=True,
    worker_prefetch_multiplier=1,
    task_acks_late=True,
    # enumeration chunks hold large transient state
    worker_max_tasks_per_child=50,
)

app.conf.beat_schedule = {
    'cleanup-finished-censuses': {
        'task': 'apps.isomers.tasks.cleanup_finished_censuses',
        'schedule': 86400,  # Daily
    },
}

app.conf.task_routes = {
    'apps.isomers.tasks.run_census': {'queue': 'census'},
    'apps.isomers.tasks.enumerate_chunk': {'queue': 'census'},
    'apps.isomers.tasks.cleanup_finished_censuses': {'queue': 'maintenance'},
}
