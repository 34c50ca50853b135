"""GF(2) linear algebra on int bitsets and bit-packed numpy arrays.

Row vectors are plain Python ints: bit j of a row is the entry in column j.
The packed uint64 routines exist for the large development matrices
(2^{2n} square); the int-bitset routines serve everything else and double
as an independent cross-check in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .errors import InvalidInput


@dataclass(frozen=True)
class Gf2Matrix:
    """Bit matrix over GF(2); rows[i] is an int bitset of length cols."""

    rows: tuple
    cols: int

    def __post_init__(self):
        for r in self.rows:
            if r >> self.cols:
                raise InvalidInput("row wider than declared column count")

    @property
    def nrows(self) -> int:
        return len(self.rows)


def rank_bits(rows: Sequence[int], cols: int) -> int:
    """Rank over GF(2) of rows given as int bitsets; input untouched."""
    basis: List[int] = []   # pivot rows, one per leading bit
    pivots: List[int] = []  # leading bit positions, descending insertion order
    rank = 0
    for r in rows:
        v = r
        for p, b in zip(pivots, basis):
            if (v >> p) & 1:
                v ^= b
        if v:
            pivots.append(v.bit_length() - 1)
            basis.append(v)
            rank += 1
            if rank == cols:
                break
    return rank


def gf2_rank(m: Gf2Matrix) -> int:
    return rank_bits(m.rows, m.cols)


def nullspace_bits(rows: Sequence[int], cols: int) -> List[int]:
    """Basis of {x : <row, x> = 0 for every row}, parity inner product."""
    # Reduce to row echelon form, tracking pivot columns.
    work = [r for r in rows if r]
    echelon: List[int] = []
    pivot_cols: List[int] = []
    for r in work:
        v = r
        for p, b in zip(pivot_cols, echelon):
            if (v >> p) & 1:
                v ^= b
        if v:
            pivot_cols.append(v.bit_length() - 1)
            echelon.append(v)
    free_cols = [j for j in range(cols) if j not in pivot_cols]
    basis = []
    for j in free_cols:
        x = 1 << j
        # Back-substitute: choose pivot coordinates so every row annihilates x.
        for p, b in sorted(zip(pivot_cols, echelon)):
            if bin(b & x).count("1") & 1:
                x ^= 1 << p
        basis.append(x)
    return basis


def solve_bits(rows: Sequence[int], cols: int, rhs: int) -> Optional[int]:
    """One solution x of the system <rows[i], x> = bit i of rhs, or None."""
    mask = (1 << cols) - 1
    aug = [r | (((rhs >> i) & 1) << cols) for i, r in enumerate(rows)]
    echelon: List[int] = []
    pivot_cols: List[int] = []
    for r in aug:
        v = r
        for p, b in zip(pivot_cols, echelon):
            if (v >> p) & 1:
                v ^= b
        data = v & mask
        if data:
            pivot_cols.append(data.bit_length() - 1)
            echelon.append(v)
        elif v:
            return None  # inconsistent: 0 = 1
    x = 0
    # Ascending pivot order: a row's non-pivot bits all sit below its pivot,
    # so those coordinates of x are already final when the pivot is assigned.
    for p, b in sorted(zip(pivot_cols, echelon)):
        val = (b >> cols) & 1
        val ^= bin((b & mask & ~(1 << p)) & x).count("1") & 1
        if val:
            x |= 1 << p
    return x


def mat_apply(columns: Sequence[int], x: int) -> int:
    """Apply the linear map whose j-th column (image of e_j) is columns[j]."""
    y = 0
    j = 0
    while x:
        if x & 1:
            y ^= columns[j]
        x >>= 1
        j += 1
    return y


def pack_rows(bool_rows: np.ndarray) -> np.ndarray:
    """Pack a (R, C) boolean matrix into (R, W) uint64 words, little-endian."""
    packed = np.packbits(bool_rows, axis=1, bitorder="little")
    pad = (-packed.shape[1]) % 8
    if pad:
        packed = np.pad(packed, ((0, 0), (0, pad)))
    return np.ascontiguousarray(packed).view(np.uint64)


def rank_packed(a: np.ndarray, cols: int) -> int:
    """Rank over GF(2) of a (R, W) uint64 bit matrix; a is consumed."""
    nrows = a.shape[0]
    rank = 0
    for col in range(cols):
        w, b = divmod(col, 64)
        live = (a[rank:, w] >> np.uint64(b)) & np.uint64(1)
        nz = np.nonzero(live)[0]
        if nz.size == 0:
            continue
        p = rank + int(nz[0])
        if p != rank:
            a[[rank, p]] = a[[p, rank]]
        rest = nz[1:] + rank
        if rest.size:
            a[rest] ^= a[rank]
        rank += 1
        if rank == nrows:
            break
    return rank
