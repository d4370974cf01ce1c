from django.apps import AppConfig


class GraphConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.graph"
    verbose_name = "图与目录"


__all__ = ["GraphConfig"]
