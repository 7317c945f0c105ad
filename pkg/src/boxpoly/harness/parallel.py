"""Ordered fan-out over worker processes."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> Iterator[R]:
    """Map ``fn`` over ``items``, yielding results in input order.

    Workers pull small chunks so uneven tasks balance; results are merged by
    input index, so the output does not depend on ``jobs``.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    items = list(items)
    if jobs == 1 or len(items) <= 1:
        yield from map(fn, items)
        return
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(fn, items, chunksize=chunk)


def mapper(jobs: int) -> Callable:
    """A ``map``-compatible callable bound to ``jobs`` workers."""

    def run(fn, items):
        return ordered_map(fn, items, jobs)

    return run
