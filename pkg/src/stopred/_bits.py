"""Bitmask utilities shared by the subset-search and erasure engines.

Column subsets of a matrix with up to 64 columns are packed into unsigned
integers (bit i = column i).  Numeric order of the masks equals
colexicographic order of the subsets, which the generators below rely on.
"""

from __future__ import annotations

from typing import Iterable, List

import numpy as np


def popcount(a: np.ndarray) -> np.ndarray:
    """Per-element population count for an unsigned integer array."""
    return np.bitwise_count(a)


def mask_dtype(n: int) -> np.dtype:
    if n <= 32:
        return np.dtype(np.uint32)
    if n <= 64:
        return np.dtype(np.uint64)
    raise ValueError(f"bitmask engine supports at most 64 columns, got {n}")


def positions_to_mask(positions: Iterable[int]) -> int:
    m = 0
    for p in positions:
        m |= 1 << p
    return m


def mask_to_positions(mask: int) -> tuple:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def weight_masks_upto(n: int, w_max: int) -> List[np.ndarray]:
    """All bitmasks over n bits of each weight 0..w_max, one array per weight.

    Each array is sorted ascending (= colex order on subsets).  Memory is the
    caller's concern: the total length is sum(C(n, w) for w <= w_max).
    """
    dt = mask_dtype(n)
    levels: List[np.ndarray] = [np.zeros(1, dtype=dt)]
    for pos in range(n):
        bit = dt.type(1 << pos)
        if len(levels) <= w_max:
            # a new top weight becomes reachable with this bit
            levels.append(levels[-1] | bit)
            start = len(levels) - 2
        else:
            start = len(levels) - 1
        for w in range(start, 0, -1):
            levels[w] = np.concatenate([levels[w], levels[w - 1] | bit])
    return levels


def weight_masks(n: int, w: int) -> np.ndarray:
    """All bitmasks over n bits of weight exactly w, ascending."""
    if w < 0 or w > n:
        return np.zeros(0, dtype=mask_dtype(n))
    return weight_masks_upto(n, w)[w]
