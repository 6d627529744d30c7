from django.apps import AppConfig


class IsomersConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.isomers'
