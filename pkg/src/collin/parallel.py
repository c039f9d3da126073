"""Worker-thread control shared by the per-column and per-replicate loops.

The ``COLLIN_THREADS`` environment variable caps worker parallelism; unset,
empty, or malformed values mean serial execution. Results are always gathered
in input order, so thread count never changes any output.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    raw = os.environ.get("COLLIN_THREADS", "")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)


def ordered_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Apply ``fn`` to each item, threaded when COLLIN_THREADS > 1."""
    seq: Sequence[T] = list(items)
    workers = min(worker_count(), len(seq)) if seq else 1
    if workers <= 1:
        return [fn(item) for item in seq]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, seq))
