"""Fixed-size chunking of large reductions across worker threads.

Chunk boundaries depend only on the item count and chunk size, and results come
back in chunk order, so sums are identical for any thread count.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Callable, Iterator, List, Optional, Tuple, TypeVar

from gcfkit.config import settings

T = TypeVar('T')

_scoped_threads: ContextVar[Optional[int]] = ContextVar('gcfkit_worker_threads', default=None)


@contextmanager
def worker_threads(threads: Optional[int]) -> Iterator[None]:
    """Default thread count for every :func:`map_chunks` call in the block; None keeps the current one."""
    if threads is not None and threads < 1:
        raise ValueError('thread count must be positive')
    token = _scoped_threads.set(threads if threads is not None else _scoped_threads.get())
    try:
        yield
    finally:
        _scoped_threads.reset(token)


def current_threads(threads: Optional[int] = None) -> int:
    """Explicit count, else the scoped one, else ``settings.DEFAULT_THREADS``."""
    return int(threads or _scoped_threads.get() or settings.DEFAULT_THREADS)


def chunk_bounds(total: int, chunk_size: Optional[int] = None) -> List[Tuple[int, int]]:
    size = int(chunk_size or settings.MC_CHUNK_SIZE)
    if size < 1:
        raise ValueError('chunk size must be positive')
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def map_chunks(
    fn: Callable[[int, int], T],
    total: int,
    *,
    chunk_size: Optional[int] = None,
    threads: Optional[int] = None,
) -> List[T]:
    """Apply ``fn(start, stop)`` to every chunk; results in chunk order."""
    bounds = chunk_bounds(total, chunk_size)
    workers = current_threads(threads)
    if workers <= 1 or len(bounds) <= 1:
        return [fn(start, stop) for start, stop in bounds]
    with ThreadPoolExecutor(max_workers=min(workers, len(bounds))) as pool:
        return list(pool.map(lambda bound: fn(*bound), bounds))
