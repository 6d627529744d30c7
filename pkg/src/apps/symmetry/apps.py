from django.apps import AppConfig


class SymmetryConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.symmetry'
