from django.apps import AppConfig


class SymmetryConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.symmetry"
    verbose_name = "孪生与对称"


__all__ = ["SymmetryConfig"]
