import django.core.validators
import django.db.models.deletion
import django.utils.timezone
from django.db import migrations, models

POINT_GROUP_CHOICES = [
    (g, g) for g in (
        'C1', 'C2', 'C3', 'Ci', 'Cs', 'S4', 'S6', 'C2v', 'C2h', 'C3v', 'C3h',
        'D2', 'D3', 'D5', 'D6', 'D2h', 'D2d', 'D3h', 'D3d', 'D5h', 'D5d', 'D6h', 'D6d',
        'T', 'Td', 'Th', 'I', 'Ih',
    )
]


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='CensusRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('n_min', models.IntegerField(validators=[django.core.validators.MinValueValidator(20)])),
                ('n_max', models.IntegerField(validators=[django.core.validators.MinValueValidator(20)])),
                ('pip_filter', models.CharField(blank=True, default='', max_length=255)),
                ('min_cluster', models.IntegerField(blank=True, null=True)),
                ('jobs', models.IntegerField(default=1, validators=[django.core.validators.MinValueValidator(1)])),
                ('status', models.CharField(choices=[('PENDING', 'Pending'), ('PROCESSING', 'Processing'), ('SUCCESS', 'Success'), ('FAILURE', 'Failure')], default='PENDING', max_length=20)),
                ('total_orders', models.IntegerField(blank=True, null=True)),
                ('processed_orders', models.IntegerField(default=0)),
                ('candidate_count', models.IntegerField(default=0)),
                ('isomer_count', models.IntegerField(default=0)),
                ('celery_task_id', models.CharField(blank=True, max_length=255, null=True)),
                ('created_at', models.DateTimeField(default=django.utils.timezone.now)),
                ('started_at', models.DateTimeField(blank=True, null=True)),
                ('finished_at', models.DateTimeField(blank=True, null=True)),
            ],
            options={
                'db_table': 'census_runs',
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='IsomerRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('n', models.IntegerField(validators=[django.core.validators.MinValueValidator(20)])),
                ('rank', models.IntegerField(validators=[django.core.validators.MinValueValidator(1)])),
                ('spiral', models.CharField(max_length=255)),
                ('pip', models.CharField(max_length=64)),
                ('separation', models.IntegerField(blank=True, null=True)),
                ('point_group', models.CharField(choices=POINT_GROUP_CHOICES, max_length=8)),
                ('pentagon_adjacencies', models.IntegerField(default=0)),
                ('minimal_adjacency', models.BooleanField(default=False)),
                ('hog_keyword', models.CharField(blank=True, max_length=64)),
                ('created_at', models.DateTimeField(default=django.utils.timezone.now)),
                ('census', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='isomers', to='isomers.censusrun')),
            ],
            options={
                'db_table': 'isomer_records',
                'ordering': ['n', 'rank'],
            },
        ),
        migrations.AddIndex(
            model_name='censusrun',
            index=models.Index(fields=['status'], name='census_runs_status_6f1c2a_idx'),
        ),
        migrations.AddIndex(
            model_name='censusrun',
            index=models.Index(fields=['created_at'], name='census_runs_created_9b3e41_idx'),
        ),
        migrations.AddIndex(
            model_name='censusrun',
            index=models.Index(fields=['celery_task_id'], name='census_runs_celery__4d7a10_idx'),
        ),
        migrations.AddIndex(
            model_name='isomerrecord',
            index=models.Index(fields=['census', 'pip'], name='isomer_reco_census__2e8c55_idx'),
        ),
        migrations.AddConstraint(
            model_name='isomerrecord',
            constraint=models.UniqueConstraint(fields=('census', 'n', 'rank'), name='unique_census_isomer'),
        ),
    ]
