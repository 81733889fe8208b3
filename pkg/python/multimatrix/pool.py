from __future__ import annotations

import asyncio
import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

import multimatrix

logger = logging.getLogger("multimatrix.pool")

T = TypeVar("T")
R = TypeVar("R")


def _apply(fn: Callable[[T], R], chunk: Sequence[T]) -> list[R]:
    return [fn(item) for item in chunk]


async def map_ordered(
    fn: Callable[[T], R], items: Sequence[T], workers: int = 0, chunk_size: int = 64
) -> list[R]:
    """Apply a picklable `fn` to every item, preserving input order.

    With `workers` > 0 chunks run in a process pool; results are gathered in
    chunk order, so the output equals the inline run item for item.
    """
    if workers <= 0 or len(items) <= chunk_size:
        return _apply(fn, items)

    loop = asyncio.get_running_loop()
    chunks = [items[i : i + chunk_size] for i in range(0, len(items), chunk_size)]
    logger.debug("dispatching %d chunks to %d workers", len(chunks), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = await asyncio.gather(
            *(loop.run_in_executor(pool, _apply, fn, chunk) for chunk in chunks)
        )
    return [result for part in parts for result in part]


def map_ordered_sync(
    fn: Callable[[T], R], items: Sequence[T], workers: int = 0, chunk_size: int = 64
) -> list[R]:
    """Blocking wrapper around `map_ordered`, run on uvloop."""
    if workers <= 0:
        return _apply(fn, items)
    return multimatrix.run(map_ordered(fn, items, workers, chunk_size))
