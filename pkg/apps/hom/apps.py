from django.apps import AppConfig


class HomConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.hom"
    verbose_name = "同态计数"


__all__ = ["HomConfig"]
