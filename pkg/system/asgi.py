"""
ASGI config for system project.

图同态代数 HTTP API 的 ASGI 入口，暴露模块级变量 ``application``。
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "system.settings")

application = get_asgi_application()
