"""
WSGI config for system project.

图同态代数 HTTP API 的 WSGI 入口，暴露模块级变量 ``application``。
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "system.settings")

application = get_wsgi_application()
