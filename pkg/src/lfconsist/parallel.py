"""Thread-count selection and a deterministic per-view map helper."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "LFCONSIST_THREADS"


def thread_count(requested: Optional[int] = None) -> int:
    """Resolve the worker count; 0 or None means auto (capped at 8)."""
    if requested is None:
        raw = os.environ.get(ENV_VAR, "0")
        try:
            requested = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}")
    if requested < 0:
        raise ValueError("thread count must be >= 0")
    if requested == 0:
        return min(os.cpu_count() or 1, 8)
    return requested


def map_views(fn: Callable[[T], R], items: Iterable[T],
              threads: Optional[int] = None) -> List[R]:
    """Apply ``fn`` to each item, preserving order; results are independent
    of the worker count because items never share mutable state."""
    items = list(items)
    n = thread_count(threads)
    if n <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
