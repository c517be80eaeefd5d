"""Length sequences with parts in 1..4."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator


@lru_cache(maxsize=None)
def n_compositions(total: int) -> int:
    if total == 0:
        return 1
    return sum(n_compositions(total - p) for p in range(1, 5) if p <= total)


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for p in range(1, min(4, total) + 1):
        for rest in compositions(total - p):
            yield (p,) + rest


def random_composition(rng: random.Random, total: int) -> list[int]:
    """Uniform over all compositions of ``total`` into parts 1..4."""
    out = []
    while total:
        r = rng.randrange(n_compositions(total))
        for p in range(1, min(4, total) + 1):
            c = n_compositions(total - p)
            if r < c:
                break
            r -= c
        out.append(p)
        total -= p
    return out
