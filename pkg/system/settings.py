"""
Django settings for system project.

图同态代数工具：没有业务数据表，数据库只为 Django 自身组件保留。
所有 GHA_* 调参项都可以通过环境变量或项目根目录的 .env 覆盖。
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / ".env")


def env_int(name: str, default: int) -> int:
    return int(os.environ.get(name, default))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get("DJANGO_SECRET_KEY", "django-insecure-gha-local-development-key")

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get("DJANGO_DEBUG", "true").lower() == "true"

ALLOWED_HOSTS = ["*"]

# 禁用自动添加斜杠，避免与 Django Ninja API 路由冲突
APPEND_SLASH = False


# Application definition

INSTALLED_APPS = [
    "django.contrib.auth",
    "django.contrib.contenttypes",
    # 第三方应用
    "ninja",  # Django Ninja
    "ninja_extra",  # Django Ninja Extra
    # 自定义应用
    "apps.core",
    "apps.graph",
    "apps.hom",
    "apps.connection",
    "apps.symmetry",
    "apps.algebra",
    "apps.homdet",
    "apps.cli",  # 管理命令 gha <verb>
]

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.middleware.common.CommonMiddleware",
    "apps.core.middleware.log_middleware.LogMiddleware",  # 请求日志中间件
]

ROOT_URLCONF = "system.urls"

TEMPLATES = []

WSGI_APPLICATION = "system.wsgi.application"
ASGI_APPLICATION = "system.asgi.application"


# Database

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}


# Internationalization

LANGUAGE_CODE = "zh-hans"
TIME_ZONE = "Asia/Shanghai"
USE_I18N = True
USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# ==================
# 计算设置
# ==================
GHA_JOBS = env_int("GHA_JOBS", 1)  # 默认工作进程数，运行时再按 CPU 数封顶

# 默认目录上界：max_nodes = k + offset
GHA_DEFAULT_MAX_NODES_OFFSET = env_int("GHA_DEFAULT_MAX_NODES_OFFSET", 3)
GHA_DEFAULT_MAX_TOTAL_EDGES = env_int("GHA_DEFAULT_MAX_TOTAL_EDGES", 6)
GHA_DEFAULT_MAX_MULTIPLICITY = env_int("GHA_DEFAULT_MAX_MULTIPLICITY", 2)

# 升级阶梯的起点与上限
GHA_START_MAX_NODES_OFFSET = env_int("GHA_START_MAX_NODES_OFFSET", 1)
GHA_START_MAX_TOTAL_EDGES = env_int("GHA_START_MAX_TOTAL_EDGES", 2)
GHA_CEILING_MAX_NODES_OFFSET = env_int("GHA_CEILING_MAX_NODES_OFFSET", 5)
GHA_CEILING_MAX_TOTAL_EDGES = env_int("GHA_CEILING_MAX_TOTAL_EDGES", 8)

# 校验组
GHA_FACTORIZATION_SIZE = env_int("GHA_FACTORIZATION_SIZE", 24)
GHA_ALGEBRA_PAIRS = env_int("GHA_ALGEBRA_PAIRS", 200)
GHA_ALGEBRA_SEED = env_int("GHA_ALGEBRA_SEED", 0)
GHA_CLOSURE_MAX_ROWS = env_int("GHA_CLOSURE_MAX_ROWS", 256)
GHA_RIGIDITY_MAX_NODES = env_int("GHA_RIGIDITY_MAX_NODES", 6)
GHA_PATTERN_MAX_NODES = env_int("GHA_PATTERN_MAX_NODES", 5)

# ==================
# 日志设置
# ==================
GHA_LOG_LEVEL = os.environ.get("GHA_LOG_LEVEL", "WARNING").upper()

LOG_EXCLUDE_PATHS = ["/api/docs/", "/api/openapi.json"]

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "standard",
        },
    },
    "loggers": {
        "apps": {"handlers": ["console"], "level": GHA_LOG_LEVEL, "propagate": False},
    },
}
