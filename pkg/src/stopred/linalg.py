"""Matrices and linear codes over GF(q).

Matrices are dense numpy uint8 grids of element indices.  Reduced echelon
form, rank, nullspace and codeword enumeration are generic over the field;
GF(2) additionally has a word-packed rank path (rows as Python ints) that
must agree with the generic path.

All enumeration routines refuse to expand more than ENUM_GUARD states.
"""

from __future__ import annotations

from typing import Iterator, List, Optional, Tuple

import numpy as np

from .field import FieldSpec

ENUM_GUARD = 1 << 26


class EnumerationTooLargeError(ValueError):
    """An enumeration would exceed ENUM_GUARD states."""


class Matrix:
    """Dense matrix over a FieldSpec; rows are checks, columns positions."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, rows):
        data = np.array(rows, dtype=np.uint8)
        if data.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if data.size and data.max() >= field.q:
            raise ValueError(f"entry out of range for GF({field.q})")
        self.field = field
        self.data = data

    @property
    def n_rows(self) -> int:
        return self.data.shape[0]

    @property
    def n_cols(self) -> int:
        return self.data.shape[1]

    def row_masks(self) -> List[int]:
        """Support of each row packed into an int (bit j = column j nonzero)."""
        out = []
        for row in self.data:
            m = 0
            for j in np.nonzero(row)[0]:
                m |= 1 << int(j)
            out.append(m)
        return out

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.data.copy())

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.field.q == other.field.q
                and self.data.shape == other.data.shape
                and bool(np.array_equal(self.data, other.data)))

    def __repr__(self) -> str:
        return f"Matrix(GF({self.field.q}), {self.n_rows}x{self.n_cols})"


def mat_mul(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over the field (plain ndarray in, ndarray out)."""
    if field.kind == "prime":
        return (a.astype(np.int64) @ b.astype(np.int64)) % field.q
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    for j in range(a.shape[1]):
        acc ^= field.mul_arr(a[:, j][:, None], b[j][None, :])
    return acc


def _rref(field: FieldSpec, data: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form; returns (rref array, pivot column list)."""
    a = data.astype(np.int64).copy()
    m, n = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = field.scale_arr(field.inv(int(a[r, c])), a[r])
        col = a[:, c].copy()
        col[r] = 0
        if np.any(col):
            a = field.sub_arr(a, field.mul_arr(col[:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a.astype(np.uint8), pivots


def _rank_generic(field: FieldSpec, data: np.ndarray) -> int:
    return len(_rref(field, data)[1])


def _rank_packed_gf2(rows: List[int], n_cols: int) -> int:
    """Rank over GF(2) with rows packed as ints (bit j = column j)."""
    basis: List[int] = []
    rank = 0
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
            rank += 1
    return rank


def rank(m: Matrix) -> int:
    """Row rank over the field; the input is not modified."""
    if m.field.q == 2:
        return _rank_packed_gf2(m.row_masks(), m.n_cols)
    return _rank_generic(m.field, m.data)


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form with zero rows dropped."""
    a, pivots = _rref(m.field, m.data)
    return Matrix(m.field, a[: len(pivots)])


def nullspace(m: Matrix) -> Matrix:
    """Rows form a basis of { x : M x = 0 }; row count = n_cols - rank."""
    a, pivots = _rref(m.field, m.data)
    n = m.n_cols
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = m.field.neg(int(a[r, f]))
    return Matrix(m.field, basis)


def _enumerate_combinations(field: FieldSpec, gen: np.ndarray,
                            chunk: int = 1 << 16) -> Iterator[np.ndarray]:
    """Yield chunks of all q^k row combinations of gen, message-counting order."""
    k = gen.shape[0]
    q = field.q
    total = q ** k
    if total > ENUM_GUARD:
        raise EnumerationTooLargeError(
            f"{q}^{k} combinations exceed the 2^26 enumeration guard")
    weights = np.array([q ** (k - 1 - j) for j in range(k)], dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = ((idx[:, None] // weights[None, :]) % q).astype(np.uint8)
        yield mat_mul(field, msgs, gen).astype(np.uint8)


class LinearCode:
    """A linear code defined by a parity-check or generator matrix.

    Stores full-rank generator/parity-check bases; the minimum distance is
    computed on demand by codeword enumeration and cached together with a
    minimum-weight codeword witness.
    """

    def __init__(self, field: FieldSpec, n: int, generator: Matrix,
                 parity_check: Matrix, d: Optional[int] = None):
        self.field = field
        self.n = n
        self.generator = generator
        self.parity_check = parity_check
        self.k = generator.n_rows
        self._d = d
        self._d_witness: Optional[np.ndarray] = None

    @classmethod
    def from_parity_check(cls, h: Matrix, d: Optional[int] = None) -> "LinearCode":
        gen = nullspace(h)
        pchk = rref(h)
        return cls(h.field, h.n_cols, gen, pchk, d=d)

    @classmethod
    def from_generator(cls, g: Matrix, d: Optional[int] = None) -> "LinearCode":
        gen = rref(g)  # dependent input rows reduce to a basis
        pchk = nullspace(gen)
        return cls(g.field, g.n_cols, gen, pchk, d=d)

    def min_distance(self) -> int:
        """Minimum Hamming weight over nonzero codewords (cached)."""
        if self._d is not None:
            return self._d
        if self.k == 0:
            raise ValueError("minimum distance undefined for the zero code")
        best = None
        witness = None
        for block in _enumerate_combinations(self.field, self.generator.data):
            w = np.count_nonzero(block, axis=1)
            w_pos = np.where(w == 0, self.n + 1, w)
            i = int(np.argmin(w_pos))
            if best is None or w_pos[i] < best:
                best = int(w_pos[i])
                witness = block[i].copy()
        self._d = best
        self._d_witness = witness
        return best

    def min_weight_codeword(self) -> np.ndarray:
        """A codeword attaining the minimum distance (enumerates if needed)."""
        if self._d_witness is None:
            supplied = self._d
            self._d = None
            found = self.min_distance()
            if supplied is not None and supplied != found:
                raise ValueError(
                    f"declared distance {supplied} contradicts enumeration ({found})")
        return self._d_witness

    def contains(self, vec: np.ndarray) -> bool:
        syn = mat_mul(self.field, self.parity_check.data,
                      np.asarray(vec, dtype=np.uint8)[:, None])
        return not np.any(syn)


def min_distance(c: LinearCode) -> int:
    return c.min_distance()


def enumerate_codewords(c: LinearCode) -> Iterator[np.ndarray]:
    """Every codeword exactly once, in message-counting order."""
    for block in _enumerate_combinations(c.field, c.generator.data):
        for row in block:
            yield row


def dual_codewords(c: LinearCode, include_zero: bool = False) -> np.ndarray:
    """All dual codewords as an array, lexicographically sorted by symbols.

    Position 0 is most significant; element indices order 0 < 1 < ... < q-1.
    The all-zero word sorts first and is dropped unless include_zero is set.
    """
    blocks = list(_enumerate_combinations(c.field, c.parity_check.data))
    words = np.concatenate(blocks, axis=0) if blocks else np.zeros((1, c.n), np.uint8)
    order = np.lexsort(words.T[::-1])
    words = words[order]
    return words if include_zero else words[1:]
