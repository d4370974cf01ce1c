from django.apps import AppConfig


class HomdetConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.homdet"
    verbose_name = "同构判定"


__all__ = ["HomdetConfig"]
