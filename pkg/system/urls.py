"""
URL configuration for system project.

只暴露 Ninja API（包含 /api/docs/ 与 /api/openapi.json）。
"""
from django.urls import path

from .api import api

urlpatterns = [
    path("api/", api.urls),  # 注册Ninja API路由
]
