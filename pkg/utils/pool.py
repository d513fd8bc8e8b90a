import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from config import SCAN_CHUNK_SIZE

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """
    Order-preserving map over pure work items.

    workers <= 1 runs in-process; otherwise a process pool is used, so fn and the
    items must be picklable.
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]

    chunksize = max(1, min(SCAN_CHUNK_SIZE, len(items) // (workers * 4) or 1))
    logger.debug(f"Dispatching {len(items)} items to {workers} workers (chunksize {chunksize})")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items, chunksize=chunksize))
