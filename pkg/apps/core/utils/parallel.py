"""进程池工具：按输入顺序返回结果，输出与并发度无关。"""
from __future__ import annotations

import logging
from multiprocessing import Pool
from typing import Callable, Iterable, List, Optional, TypeVar

import psutil
from django.conf import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_jobs(jobs: Optional[int] = None) -> int:
    """确定工作进程数：显式参数优先，其次 GHA_JOBS，上限为 CPU 数。"""
    requested = jobs if jobs is not None else getattr(settings, "GHA_JOBS", 1)
    available = psutil.cpu_count() or 1
    return max(1, min(int(requested), available))


def parallel_map(func: Callable[[T], R], items: Iterable[T], jobs: Optional[int] = None) -> List[R]:
    """func 必须是模块级纯函数（可被 pickle）。"""
    items = list(items)
    workers = resolve_jobs(jobs)
    if workers == 1 or len(items) < 2:
        return [func(item) for item in items]
    chunksize = max(1, len(items) // (workers * 4))
    logger.debug("parallel_map: %d items on %d workers", len(items), workers)
    with Pool(processes=workers) as pool:
        return pool.map(func, items, chunksize=chunksize)


__all__ = ["resolve_jobs", "parallel_map"]
