"""Seeded random instances."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .core import Instance, Item


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    seed: int = 0
    w_max: int = 10
    c_max: int = 10
    capacity: Optional[int] = None  # None: half the total weight, rounded up

    def __post_init__(self):
        if self.n < 1 or self.w_max < 1 or self.c_max < 0:
            raise ValueError("need n >= 1, w_max >= 1, c_max >= 0")
        if self.capacity is not None and self.capacity < self.w_max:
            raise ValueError("fixed capacity must be at least w_max so every item fits")


def generate_instance(config: GeneratorConfig) -> Instance:
    rng = random.Random(config.seed)
    c = config.c_max
    items = tuple(
        Item(rng.randint(1, config.w_max), rng.randint(-c, c), rng.randint(-c, c))
        for _ in range(config.n)
    )
    if config.capacity is None:
        total = sum(it.weight for it in items)
        capacity = -(-total // 2)
    else:
        capacity = config.capacity
    # half the total weight can undercut a heavy item when n is tiny
    capacity = max(capacity, max(it.weight for it in items))
    return Instance(capacity, items)


def corpus(count: int, seed: int = 0, n_max: int = 10, w_max: int = 10, c_max: int = 10) -> list[Instance]:
    """``count`` instances with n drawn from 1..n_max, reproducible from ``seed``."""
    rng = random.Random(seed)
    return [
        generate_instance(GeneratorConfig(rng.randint(1, n_max), rng.getrandbits(64), w_max, c_max))
        for _ in range(count)
    ]
