"""Exact erasure-channel analysis: peeling and ML decoders, undecodable
pattern counts by weight, and decoding-failure curves.

Counting is exhaustive per weight over bitmask batches.  Two analytic
shortcuts are exact and used to avoid pointless enumeration: once every
pattern of some weight fails, every heavier weight fails too (failure is
monotone under adding erasures); and any pattern with more erasures than
rank(H) has linearly dependent columns, so both decoders fail on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ._bits import weight_masks
from .linalg import (EnumerationTooLargeError, LinearCode, Matrix,
                     _rank_generic, rank)

WEIGHT_GUARD = 1 << 25


@dataclass(frozen=True)
class PeelOutcome:
    """Result of peeling: recovered positions and the residual stopping set
    (empty residue means full recovery)."""

    recovered: frozenset
    residue: frozenset

    @property
    def success(self) -> bool:
        return not self.residue


@dataclass
class PsiProfile:
    """Per-weight counts of undecodable erasure patterns.

    counts[w] is the number of weight-w patterns the decoder fails on, or
    None when the weight was outside the requested enumeration range.
    """

    n: int
    decoder: str
    counts: List[Optional[int]]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n + 1:
            raise ValueError("counts must cover w = 0..n")
        for w, value in enumerate(self.counts):
            if value is not None and not 0 <= value <= comb(self.n, w):
                raise ValueError(f"count {value} out of range at weight {w}")

    def to_csv(self) -> str:
        lines = ["w,count"]
        for w, value in enumerate(self.counts):
            if value is not None:
                lines.append(f"{w},{value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str, decoder: str = "csv") -> "PsiProfile":
        rows = [ln.strip() for ln in text.strip().splitlines()]
        if not rows or rows[0] != "w,count":
            raise ValueError("expected a 'w,count' CSV header")
        pairs = {}
        for ln in rows[1:]:
            w_str, c_str = ln.split(",")
            pairs[int(w_str)] = int(c_str)
        n = max(pairs)
        counts: List[Optional[int]] = [pairs.get(w) for w in range(n + 1)]
        return cls(n, decoder, counts)


def _pattern_set(positions, n: int) -> frozenset:
    pos = frozenset(int(p) for p in positions)
    if pos and (min(pos) < 0 or max(pos) >= n):
        raise ValueError(f"erased position out of range [0, {n})")
    return pos


def iterative_decode(h: Matrix, erased) -> PeelOutcome:
    """Peel: repeatedly resolve any check with exactly one erased position.

    The fixpoint is order-independent; the residue is the unique maximal
    stopping set inside the pattern (empty iff decoding succeeds).
    """
    pattern = _pattern_set(erased, h.n_cols)
    remaining = set(pattern)
    supports = [set(np.nonzero(row)[0].tolist()) for row in h.data]
    progress = True
    while progress and remaining:
        progress = False
        for sup in supports:
            hit = sup & remaining
            if len(hit) == 1:
                remaining -= hit
                progress = True
    return PeelOutcome(frozenset(pattern - remaining), frozenset(remaining))


def ml_decode(h: Matrix, erased) -> bool:
    """True iff the erased columns of h are linearly independent."""
    pattern = sorted(_pattern_set(erased, h.n_cols))
    if not pattern:
        return True
    sub = Matrix(h.field, h.data[:, pattern])
    return rank(sub) == len(pattern)


def _peel_residues(row_masks: Sequence[int], patterns: np.ndarray,
                   n: int) -> np.ndarray:
    """Vectorized peeling fixpoint for a batch of pattern masks."""
    dt = patterns.dtype
    one = dt.type(1)
    rows = [dt.type(r) for r in row_masks if r]
    erased = patterns.copy()
    while True:
        before = erased.copy()
        for r in rows:
            x = erased & r
            single = (x != 0) & ((x & (x - one)) == 0)
            erased = np.where(single, erased ^ x, erased)
        if np.array_equal(erased, before):
            return erased


def _ml_fail_batch_gf2(col_bits: Sequence[int], patterns: np.ndarray,
                       r_bits: int) -> np.ndarray:
    """Batch column-rank test over GF(2): True where columns are dependent."""
    dt = patterns.dtype
    n_pat = len(patterns)
    basis = np.zeros((n_pat, r_bits), dtype=np.uint32)
    fail = np.zeros(n_pat, dtype=bool)
    for j, cj in enumerate(col_bits):
        active = ((patterns >> dt.type(j)) & dt.type(1)) != 0
        if not active.any():
            continue
        c = np.where(active, np.uint32(cj), np.uint32(0))
        for h in range(r_bits - 1, -1, -1):
            hit = ((c >> np.uint32(h)) & np.uint32(1)) != 0
            if hit.any():
                c = np.where(hit, c ^ basis[:, h], c)
        fail |= active & (c == 0)
        ins = c != 0
        if ins.any():
            lead = np.floor(np.log2(c[ins])).astype(np.int64)
            basis[np.nonzero(ins)[0], lead] = c[ins]
    return fail


def _check_weight_guard(n: int, w: int) -> None:
    if comb(n, w) > WEIGHT_GUARD:
        raise EnumerationTooLargeError(
            f"C({n},{w}) patterns exceed the per-weight 2^25 guard")


def psi_stop(h: Matrix, w_max: Optional[int] = None,
             matrix_id: str = "H") -> PsiProfile:
    """Count per weight the erasure patterns on which peeling fails."""
    n = h.n_cols
    r = rank(h)
    limit = n if w_max is None else min(w_max, n)
    masks = h.row_masks()
    counts: List[Optional[int]] = [None] * (n + 1)
    for w in range(n + 1):
        if w > r:
            counts[w] = comb(n, w)  # dependent columns: always undecodable
            continue
        if w > 0 and counts[w - 1] == comb(n, w - 1):
            counts[w] = comb(n, w)  # failure is monotone in the pattern
            continue
        if w > limit:
            continue
        _check_weight_guard(n, w)
        level = weight_masks(n, w)
        residues = _peel_residues(masks, level, n)
        counts[w] = int(np.count_nonzero(residues))
    return PsiProfile(n, f"iterative({matrix_id})", counts)


def psi_ml(c: LinearCode, w_max: Optional[int] = None) -> PsiProfile:
    """Count per weight the erasure patterns with dependent erased columns."""
    n = c.n
    h = c.parity_check
    r = h.n_rows
    limit = n if w_max is None else min(w_max, n)
    counts: List[Optional[int]] = [None] * (n + 1)
    col_bits = None
    if c.field.q == 2 and r <= 32:
        col_bits = [int(x) for x in
                    (h.data.T.astype(np.uint64) << np.arange(r, dtype=np.uint64)
                     ).sum(axis=1)] if r else [0] * n
    for w in range(n + 1):
        if w > r:
            counts[w] = comb(n, w)
            continue
        if w > 0 and counts[w - 1] == comb(n, w - 1):
            counts[w] = comb(n, w)
            continue
        if w > limit:
            continue
        _check_weight_guard(n, w)
        level = weight_masks(n, w)
        if col_bits is not None:
            fail = _ml_fail_batch_gf2(col_bits, level, r)
            counts[w] = int(np.count_nonzero(fail))
        else:
            bad = 0
            for m in level:
                cols = [j for j in range(n) if (int(m) >> j) & 1]
                sub = h.data[:, cols]
                if _rank_generic(c.field, sub) < w:
                    bad += 1
            counts[w] = bad
    return PsiProfile(n, "ML", counts)


def failure_curve(profile: PsiProfile,
                  p_grid: Sequence[float]) -> List[Tuple[float, float]]:
    """Evaluate sum_w psi(w) p^w (1-p)^(n-w) at each erasure probability."""
    if any(v is None for v in profile.counts):
        raise ValueError("profile is incomplete; enumerate all weights first")
    out = []
    n = profile.n
    for p in p_grid:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"erasure probability {p} outside [0, 1]")
        prob = 0.0
        for w, count in enumerate(profile.counts):
            if count:
                prob += count * (p ** w) * ((1.0 - p) ** (n - w))
        out.append((float(p), prob))
    return out


def curve_to_csv(points: Sequence[Tuple[float, float]]) -> str:
    lines = ["p,prob"]
    for p, prob in points:
        lines.append(f"{p:.10g},{prob:.17g}")
    return "\n".join(lines) + "\n"
