from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar
import logging
import os

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def resolve_workers(threads: int = 0) -> int:
    """Worker count for a sweep (0 = one per CPU)"""
    if threads and threads > 0:
        return int(threads)
    return os.cpu_count() or 1


def _chunks(items: Sequence[T], count: int) -> List[Sequence[T]]:
    size, extra = divmod(len(items), count)
    chunks, start = [], 0
    for k in range(count):
        stop = start + size + (1 if k < extra else 0)
        if stop > start:
            chunks.append(items[start:stop])
        start = stop
    return chunks


def run_partitioned(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """Map fn over contiguous chunks of items; results keep input order.

    Samples must be drawn before calling, so the output does not depend on
    the worker count.
    """
    items = list(items)
    workers = max(1, min(resolve_workers(workers), len(items) or 1))
    if workers == 1:
        return [fn(item) for item in items]

    def run_chunk(chunk):
        return [fn(item) for item in chunk]

    logger.debug(f"Running {len(items)} samples on {workers} workers")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run_chunk, _chunks(items, workers)))
    return [value for chunk in results for value in chunk]
