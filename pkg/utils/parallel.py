"""
Worker pool for data-parallel sweeps
Results come back in submission order whatever the worker count
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from config import config

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: Optional[int]) -> int:
    """None means the configured value; 0 means one worker per CPU"""
    if threads is None:
        threads = config.threads
    if threads <= 0:
        threads = os.cpu_count() or 1
    return threads


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None,
                chunk_size: Optional[int] = None) -> List[R]:
    """
    map(fn, items) as a list. With one worker everything runs inline;
    otherwise fn and the items must be picklable.
    """
    items = list(items)
    chunk_size = config.chunk_size if chunk_size is None else chunk_size
    workers = min(resolve_threads(threads), max(len(items), 1))
    if workers == 1:
        return [fn(item) for item in items]

    logger.info("dispatching %d tasks to %d workers", len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items, chunksize=chunk_size))
