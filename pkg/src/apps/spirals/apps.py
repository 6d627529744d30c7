from django.apps import AppConfig


class SpiralsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.spirals'
