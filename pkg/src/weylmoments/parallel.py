"""Deterministic work splitting.

Every parallel loop in this package reduces per-chunk results in fixed
chunk order, so outputs are bit-identical for any worker count.  Threads
are used (not processes): the kernels either hold the GIL anyway or are
cheap enough that determinism, not throughput, is the contract.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> list[R]:
    """Apply fn to items, returning results in input order."""
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def split_range(lo: int, hi: int, parts: int) -> list[range]:
    """Split range(lo, hi) into at most `parts` contiguous chunks."""
    n = hi - lo
    if n <= 0:
        return []
    parts = max(1, min(parts, n))
    step = -(-n // parts)
    return [range(start, min(start + step, hi)) for start in range(lo, hi, step)]


def chunked(items: Sequence[T], parts: int) -> list[Sequence[T]]:
    """Split a sequence into at most `parts` contiguous chunks."""
    n = len(items)
    if n == 0:
        return []
    parts = max(1, min(parts, n))
    step = -(-n // parts)
    return [items[i:i + step] for i in range(0, n, step)]


def resolve_workers(workers: int | None) -> int:
    return 1 if workers is None else max(1, int(workers))
