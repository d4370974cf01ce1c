from django.apps import AppConfig


class ConnectionConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.connection"
    verbose_name = "连接矩阵"


__all__ = ["ConnectionConfig"]
