"""耗时相关的轻量工具。"""
import time
from typing import Optional, Union


def now() -> float:
    """单调时钟读数（秒）。"""
    return time.perf_counter()


def duration_ms(start: Union[int, float], end: Optional[Union[int, float]] = None) -> int:
    """计算耗时毫秒数；end 缺省为当前时刻。"""
    if end is None:
        end = now()
    return int((end - start) * 1000)


__all__ = ["now", "duration_ms"]
