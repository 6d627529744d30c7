from django.apps import AppConfig


class PlanarcodeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.planarcode'
