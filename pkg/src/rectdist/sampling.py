"""Seeded random rectangles and barcodes with integer endpoints."""

from __future__ import annotations

import random
from typing import Optional

from .barcode_io import Barcode
from .extended_reals import NEG_INF, POS_INF, ExtReal
from .rectangles import Rectangle

__all__ = ["random_rectangle", "random_barcode"]


def random_rectangle(
    rng: random.Random,
    dim: int,
    lo: int = -5,
    hi: int = 5,
    inf_prob: float = 0.1,
) -> Rectangle:
    """Integer endpoints drawn from ``[lo, hi]``; each endpoint independently
    becomes infinite with probability ``inf_prob``."""
    if dim < 1:
        raise ValueError("dim must be at least 1")
    if hi <= lo:
        raise ValueError(f"need lo < hi, got {lo}..{hi}")
    if not 0 <= inf_prob <= 1:
        raise ValueError(f"inf_prob must lie in [0, 1], got {inf_prob}")
    lower, upper = [], []
    for _ in range(dim):
        a, b = sorted(rng.sample(range(lo, hi + 1), 2))
        lower.append(NEG_INF if rng.random() < inf_prob else ExtReal(a))
        upper.append(POS_INF if rng.random() < inf_prob else ExtReal(b))
    return Rectangle(tuple(lower), tuple(upper))


def random_barcode(
    rng: random.Random,
    count: int,
    dim: int,
    lo: int = -5,
    hi: int = 5,
    inf_prob: float = 0.1,
    dup_prob: float = 0.0,
) -> Barcode:
    """``count`` random bars; with ``dup_prob`` a bar repeats an earlier one."""
    if count < 0:
        raise ValueError("count must be non-negative")
    bars: list[Rectangle] = []
    for _ in range(count):
        if bars and rng.random() < dup_prob:
            bars.append(rng.choice(bars))
        else:
            bars.append(random_rectangle(rng, dim, lo, hi, inf_prob))
    return Barcode(tuple(bars), dim)


def seeded(seed: Optional[int]) -> random.Random:
    return random.Random(0 if seed is None else seed)
