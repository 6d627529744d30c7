from django.apps import AppConfig


class GoldbergConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.goldberg'
