"""Greedy lexicographic search for small full-stopping-distance matrices,
and an exact minimum-row search for tiny codes.

The greedy rule: among all nonzero dual codewords (lexicographic order),
repeatedly adjoin the first one of maximal score, where a word scores i
points for every yet-uncovered i-set it covers (i = 1..d-1).  Scores only
decrease as coverage grows, so a lazy priority queue evaluates only the
few candidates that can still be maximal; the selection is identical to
rescoring everything each round.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import comb
from typing import List

import numpy as np

from ._bits import mask_dtype, popcount, weight_masks
from .linalg import LinearCode, Matrix, dual_codewords, rank
from .stopping import stopping_distance

UNIVERSE_GUARD = 1 << 24
CLASS_GUARD = 128


@dataclass(frozen=True)
class RedundancyResult:
    """Outcome of the exact search: value is exact when `exact` is set,
    otherwise only an upper bound (the incumbent when the budget ran out)."""

    value: int
    exact: bool


def _candidate_masks(words: np.ndarray, n: int) -> List[int]:
    out = []
    for row in words:
        m = 0
        for j in np.nonzero(row)[0]:
            m |= 1 << int(j)
        out.append(m)
    return out


def greedy_construct(c: LinearCode, weighted: bool = True) -> Matrix:
    """Greedy coverage construction; returns a matrix with s = d(C).

    weighted=False scores every uncovered set 1 point regardless of size
    (an experimentation variant; the weighted rule is the default).
    """
    d = c.min_distance()
    n = c.n
    if sum(comb(n, i) for i in range(1, d)) > UNIVERSE_GUARD:
        raise ValueError("tracked i-set universe exceeds the 2^24 guard")
    words = dual_codewords(c, include_zero=False)
    masks = _candidate_masks(words, n)
    dt = mask_dtype(n)
    cand = [dt.type(m) for m in masks]
    cand_weight = [m.bit_count() for m in masks]
    size_weight = {i: (i if weighted else 1) for i in range(1, d)}

    uncovered = {i: weight_masks(n, i) for i in range(1, d)}

    def score_of(idx: int) -> int:
        total = 0
        cm = cand[idx]
        for i, level in uncovered.items():
            if level.size:
                total += size_weight[i] * int(
                    np.count_nonzero(popcount(level & cm) == 1))
        return total

    # Iteration 0 scores have a closed form: every i-set is still uncovered,
    # so a weight-w word covers exactly w * C(n-w, i-1) of each size.
    score_cache = [
        sum(size_weight[i] * w * comb(n - w, i - 1) for i in range(1, d))
        for w in cand_weight
    ]
    stamp = [0] * len(cand)
    round_no = 0
    heap = [(-s, idx) for idx, s in enumerate(score_cache)]
    heapq.heapify(heap)

    chosen: List[int] = []
    while any(level.size for level in uncovered.values()):
        while True:
            if not heap:
                raise ValueError("coverage unreachable; dual words exhausted")
            neg, idx = heapq.heappop(heap)
            if -neg != score_cache[idx]:
                continue  # superseded entry
            if stamp[idx] == round_no:
                break
            fresh = score_of(idx)
            score_cache[idx] = fresh
            stamp[idx] = round_no
            if fresh == -neg:
                break
            heapq.heappush(heap, (-fresh, idx))
        if score_cache[idx] == 0:
            raise ValueError("coverage unreachable with the available dual words")
        chosen.append(idx)
        cm = cand[idx]
        for i in list(uncovered):
            level = uncovered[i]
            if level.size:
                uncovered[i] = level[popcount(level & cm) != 1]
        heapq.heappush(heap, (-score_cache[idx], idx))
        round_no += 1

    out = Matrix(c.field, words[chosen])
    got = rank(out)
    if got != c.n - c.k:
        raise ValueError(
            f"greedy cover spans rank {got}, expected {c.n - c.k}")
    report = stopping_distance(out, cap=d)
    if report.s != d:
        raise ValueError(f"greedy result has stopping distance {report.s} != {d}")
    return out


def _projective_reps(c: LinearCode) -> np.ndarray:
    words = dual_codewords(c, include_zero=False)
    if c.field.q == 2:
        return words
    keep = []
    for row in words:
        if int(row[np.nonzero(row)[0][0]]) == 1:
            keep.append(row)
    return np.array(keep, dtype=np.uint8)


class _FieldBasis:
    """Incremental row basis over GF(q) for rank-feasibility pruning."""

    def __init__(self, field):
        self.field = field
        self.rows: List[np.ndarray] = []

    def try_add(self, vec: np.ndarray) -> bool:
        v = vec.astype(np.int64)
        for b in self.rows:
            pivot = int(np.nonzero(b)[0][0])
            if v[pivot]:
                coef = self.field.mul(int(v[pivot]), self.field.inv(int(b[pivot])))
                v = self.field.sub_arr(v, self.field.scale_arr(coef, b))
        if not np.any(v):
            return False
        self.rows.append(v)
        self.rows.sort(key=lambda r: int(np.nonzero(r)[0][0]))
        return True

    def clone(self) -> "_FieldBasis":
        nb = _FieldBasis(self.field)
        nb.rows = list(self.rows)
        return nb

    def __len__(self) -> int:
        return len(self.rows)


def exact_stopping_redundancy(c: LinearCode,
                              budget: int = 2_000_000) -> RedundancyResult:
    """Minimum rows of any parity-check matrix for c with s = d(C).

    Branch-and-bound set cover over projective dual classes: rows must
    cover every i-set (i = 1..d-1) and span the dual.  The greedy matrix
    seeds the incumbent.  Exhausting the node budget returns the incumbent
    flagged as an upper bound only.
    """
    d = c.min_distance()
    n, k = c.n, c.k
    reps = _projective_reps(c)
    if len(reps) > CLASS_GUARD:
        raise ValueError(f"{len(reps)} projective dual classes exceed the "
                         f"{CLASS_GUARD} search guard")
    masks = _candidate_masks(reps, n)

    sets: List[int] = []
    for i in range(1, d):
        level = weight_masks(n, i)
        sets.extend(int(x) for x in level)
    n_sets = len(sets)
    cover = []
    for m in masks:
        bits = 0
        for si, s in enumerate(sets):
            x = s & m
            if x and (x & (x - 1)) == 0:
                bits |= 1 << si
        cover.append(bits)
    full = (1 << n_sets) - 1

    incumbent = greedy_construct(c).n_rows
    best = [incumbent]
    nodes = [0]
    aborted = [False]

    n_cand = len(reps)

    def dfs(uncovered: int, count: int, banned: int, basis: _FieldBasis) -> None:
        if aborted[0]:
            return
        if uncovered == 0:
            value = count + max(0, (n - k) - len(basis))
            if value < best[0]:
                best[0] = value
            return
        nodes[0] += 1
        if nodes[0] > budget:
            aborted[0] = True
            return
        allowance = best[0] - 1 - count
        if allowance <= 0:
            return
        max_cover = 0
        for ci in range(n_cand):
            if (banned >> ci) & 1:
                continue
            got = (cover[ci] & uncovered).bit_count()
            if got > max_cover:
                max_cover = got
        if max_cover == 0:
            return
        lb = max(-(-uncovered.bit_count() // max_cover), (n - k) - len(basis))
        if lb > allowance:
            return
        # branch on the uncovered set with the fewest available coverers
        target = None
        target_cands: List[int] = []
        for si in range(n_sets):
            if not (uncovered >> si) & 1:
                continue
            cands = [ci for ci in range(n_cand)
                     if not (banned >> ci) & 1 and (cover[ci] >> si) & 1]
            if target is None or len(cands) < len(target_cands):
                target, target_cands = si, cands
                if len(cands) <= 1:
                    break
        ban = banned
        for ci in target_cands:
            nb = basis.clone()
            nb.try_add(reps[ci])
            dfs(uncovered & ~cover[ci], count + 1, ban, nb)
            ban |= 1 << ci
            if aborted[0]:
                return

    dfs(full, 0, 0, _FieldBasis(c.field))
    return RedundancyResult(best[0], exact=not aborted[0])
