"""multimatrix: exact combinatorics on n-dimensional 0/1 and cost arrays."""

from typing import Coroutine, TypeVar

import uvloop

__version__ = "0.1.0"

T = TypeVar("T")


def run(coro: Coroutine[None, None, T]) -> T:
    """Run an async function with uvloop.

    The worker pool behind `gap-scan` and `hunt` is driven through this entry point.

    Example:
        async def main():
            return await map_ordered(solve, instances, workers=4)

        multimatrix.run(main())
    """
    return uvloop.run(coro)


__all__ = ["__version__", "run"]
