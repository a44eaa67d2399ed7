"""Thread cap shared by the searches; results never depend on it."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_threads = 1


def set_threads(n: int) -> None:
    global _threads
    _threads = max(1, int(n))


def get_threads() -> int:
    return _threads


def first_hit(fn: Callable[[T], R | None], items: Iterable[T]) -> R | None:
    """fn over items in order; the first non-None result by item order."""
    items = list(items)
    if _threads <= 1 or len(items) < 2:
        for it in items:
            r = fn(it)
            if r is not None:
                return r
        return None
    with ThreadPoolExecutor(max_workers=_threads) as pool:
        # chunked so an early hit avoids most of the work, order preserved
        for start in range(0, len(items), _threads):
            for r in pool.map(fn, items[start:start + _threads]):
                if r is not None:
                    return r
    return None


def ordered_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    items = list(items)
    if _threads <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=_threads) as pool:
        return list(pool.map(fn, items))
