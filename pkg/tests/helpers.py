"""Independent oracles and EA-transformation helpers shared by the tests.

Everything here is deliberately brute-force and kept apart from the library
code paths it cross-checks.
"""

from __future__ import annotations

import random
from collections import Counter
from typing import List, Tuple

from crooked.field import FieldCtx
from crooked.vbf import TruthTable


def naive_walsh(f: TruthTable, a: int, omega: int) -> int:
    """Direct double-sum Walsh value, via field trace only."""
    ctx = f.ctx
    acc = 0
    for x in range(ctx.order):
        bit = ctx.trace(ctx.mul(a, f[x])) ^ ctx.trace(ctx.mul(omega, x))
        acc += -1 if bit else 1
    return acc


def naive_diff_spectrum(f: TruthTable) -> Tuple[int, Counter]:
    """Solution counts per (a, b) by plain dict counting."""
    order = f.ctx.order
    spectrum: Counter = Counter()
    delta = 0
    for a in range(1, order):
        per_b = Counter(f[x] ^ f[x ^ a] for x in range(order))
        delta = max(delta, max(per_b.values()))
        for b in range(order):
            spectrum[per_b.get(b, 0)] += 1
    return delta, spectrum


def naive_rank(matrix: List[List[int]]) -> int:
    """Fraction-free list-of-lists Gaussian elimination over GF(2)."""
    m = [row[:] for row in matrix]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                m[r] = [x ^ y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def bits_to_lists(rows: List[int], cols: int) -> List[List[int]]:
    return [[(r >> j) & 1 for j in range(cols)] for r in rows]


def random_invertible(n: int, rng: random.Random) -> List[int]:
    """Columns (images of basis vectors) of a random invertible GF(2) matrix."""
    while True:
        cols = [rng.randrange(1, 1 << n) for _ in range(n)]
        if _bit_rank(cols) == n:
            return cols


def _bit_rank(rows: List[int]) -> int:
    basis: List[int] = []
    for r in rows:
        v = r
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def apply_linear(cols: List[int], x: int) -> int:
    y = 0
    for j, c in enumerate(cols):
        if (x >> j) & 1:
            y ^= c
    return y


def ea_transform(f: TruthTable, rng: random.Random) -> TruthTable:
    """g = A1 o f o A2 + A for random affine permutations A1, A2 and affine A."""
    n = f.ctx.n
    a1 = random_invertible(n, rng)
    a2 = random_invertible(n, rng)
    la = [rng.randrange(1 << n) for _ in range(n)]
    c1, c2, ca = (rng.randrange(1 << n) for _ in range(3))
    vals = [0] * f.ctx.order
    for x in range(f.ctx.order):
        inner = apply_linear(a2, x) ^ c2
        vals[x] = apply_linear(a1, f[inner]) ^ c1 ^ apply_linear(la, x) ^ ca
    return TruthTable(f.ctx, vals)


def random_quadratic(ctx: FieldCtx, rng: random.Random):
    """Random multinomial with all exponents of binary weight 2."""
    from crooked.vbf import multinomial

    exps = [(1 << i) + (1 << j) for i in range(ctx.n) for j in range(i)]
    chosen = rng.sample(exps, k=min(3, len(exps)))
    return multinomial(ctx, [(rng.randrange(1, ctx.order), e) for e in chosen])
