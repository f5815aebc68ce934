"""Deterministic fan-out over independent work items."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

ENV_VAR = "LRPUZZLES_THREADS"


def workers():
    """Thread count from LRPUZZLES_THREADS, else the available CPUs."""
    raw = os.environ.get(ENV_VAR)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}") from None
        if value < 1:
            raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}")
        return value
    return os.cpu_count() or 1


def pmap(fn, items):
    """``list(map(fn, items))``, possibly on a thread pool; order is preserved."""
    items = list(items)
    n = workers()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
