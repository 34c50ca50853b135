"""Vectorial Boolean functions F_{2^n} -> F_{2^n} as truth tables:
differential spectra, APN tests, and crooked (hyperplane-derivative)
verification."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from . import gf2mat
from .errors import InfeasibleSize, InvalidDirection, InvalidInput
from .field import FieldCtx

EXHAUSTIVE_MAX_N = 16

_parity_cache: Dict[int, np.ndarray] = {}
_trace_solver_cache: Dict[Tuple[int, int], Tuple[Tuple[int, ...], int]] = {}


def parity_table(n: int) -> np.ndarray:
    """uint8 table of popcount parity for all values below 2^n."""
    t = _parity_cache.get(n)
    if t is None:
        bits = np.arange(1 << n, dtype=np.uint32)
        t = np.zeros(1 << n, dtype=np.uint8)
        while bits.any():
            t ^= (bits & 1).astype(np.uint8)
            bits >>= 1
        _parity_cache[n] = t
    return t


@dataclass(frozen=True)
class Multinomial:
    """Sparse function sum of coeff * x^exp over a fixed field.

    Exponents are reduced into [1, 2^n - 1] and coefficients of colliding
    exponents are merged by XOR at construction (use `multinomial`).
    """

    ctx: FieldCtx
    terms: Tuple[Tuple[int, int], ...]


def multinomial(ctx: FieldCtx, terms: Iterable[Tuple[int, int]]) -> Multinomial:
    merged: Dict[int, int] = {}
    for coeff, exp in terms:
        if exp < 1:
            raise InvalidInput(f"exponent {exp} < 1")
        if coeff >> ctx.n:
            raise InvalidInput(f"coefficient {coeff:#x} outside GF(2^{ctx.n})")
        if coeff == 0:
            continue
        e = exp % ctx.mult_order if ctx.n > 1 else exp
        if e == 0:
            e = ctx.mult_order
        merged[e] = merged.get(e, 0) ^ coeff
    out = tuple(sorted(((c, e) for e, c in merged.items() if c), key=lambda t: t[1]))
    return Multinomial(ctx, out)


def is_quadratic(m: Multinomial) -> bool:
    """All exponents of binary weight 2 (or weight-2 after reduction)."""
    return all(bin(e).count("1") == 2 for _, e in m.terms)


class TruthTable:
    """Exhaustive value table; values[x] = f(x) with x read as basis bits."""

    def __init__(self, ctx: FieldCtx, values: Sequence[int]):
        if len(values) != ctx.order:
            raise InvalidInput(f"table length {len(values)} != 2^{ctx.n}")
        self.ctx = ctx
        self.values = np.asarray(values, dtype=np.uint32)
        if self.values.size and int(self.values.max()) >= ctx.order:
            raise InvalidInput("table entry outside the field")

    def __getitem__(self, x: int) -> int:
        return int(self.values[x])

    def __eq__(self, other):
        return (
            isinstance(other, TruthTable)
            and self.ctx == other.ctx
            and bool(np.array_equal(self.values, other.values))
        )

    def __repr__(self):
        return f"TruthTable(n={self.ctx.n}, values[:4]={self.values[:4].tolist()}...)"


def from_multinomial(m: Multinomial) -> TruthTable:
    ctx = m.ctx
    vals = [0] * ctx.order
    for x in range(1, ctx.order):
        acc = 0
        for coeff, exp in m.terms:
            acc ^= ctx.mul(coeff, ctx.pow(x, exp))
        vals[x] = acc
    return TruthTable(ctx, vals)


def derivative_values(f: TruthTable, a: int) -> np.ndarray:
    if a == 0 or a >= f.ctx.order:
        raise InvalidDirection(f"direction a={a} invalid")
    xs = np.arange(f.ctx.order, dtype=np.uint32)
    return f.values ^ f.values[xs ^ np.uint32(a)]


def derivative_set(f: TruthTable, a: int) -> frozenset:
    """Image set {f(x) + f(x+a)} of the direction-a derivative."""
    return frozenset(int(v) for v in np.unique(derivative_values(f, a)))


def differential_spectrum(f: TruthTable) -> Tuple[int, Counter]:
    """(delta, multiset of solution counts over all (a != 0, b) pairs)."""
    n = f.ctx.n
    if n > EXHAUSTIVE_MAX_N:
        raise InfeasibleSize(f"exhaustive differential scan capped at n={EXHAUSTIVE_MAX_N}")
    order = f.ctx.order
    spectrum: Counter = Counter()
    delta = 0
    for a in range(1, order):
        counts = np.bincount(derivative_values(f, a), minlength=order)
        delta = max(delta, int(counts.max()))
        vals, mults = np.unique(counts, return_counts=True)
        for v, m in zip(vals.tolist(), mults.tolist()):
            spectrum[v] += m
    return delta, spectrum


def is_apn(f: TruthTable) -> bool:
    delta, _ = differential_spectrum(f)
    return delta == 2


def is_apn_quadratic(f: TruthTable) -> bool:
    """APN shortcut valid for quadratic f (f(0) = 0): for every direction the
    bilinear derivative f(x)+f(x+a)+f(a) vanishes at exactly two points."""
    order = f.ctx.order
    for a in range(1, order):
        dv = derivative_values(f, a)
        if int(np.count_nonzero(dv == dv[0])) != 2:
            return False
    return True


@dataclass(frozen=True)
class HyperplaneWitness:
    """The set equals {y : trace(b*y) = eps}."""

    b: int
    eps: int


def _trace_form_solver(ctx: FieldCtx) -> Tuple[Tuple[int, ...], int]:
    """Rows of the trace Gram matrix M[i] with bit j = tr(e_i * e_j)."""
    key = (ctx.n, ctx.modulus)
    cached = _trace_solver_cache.get(key)
    if cached is None:
        rows = []
        for i in range(ctx.n):
            r = 0
            for j in range(ctx.n):
                if ctx.trace(ctx.mul(1 << i, 1 << j)):
                    r |= 1 << j
            rows.append(r)
        cached = (tuple(rows), ctx.n)
        _trace_solver_cache[key] = cached
    return cached


def _functional_to_trace(ctx: FieldCtx, w: int) -> int:
    """The unique b with trace(b*y) = parity(w & y) for every y."""
    rows, n = _trace_form_solver(ctx)
    b = gf2mat.solve_bits(rows, n, w)
    assert b is not None  # trace form is nondegenerate
    return b


def hyperplane_of(ctx: FieldCtx, s: Iterable[int]) -> Optional[HyperplaneWitness]:
    """Witness (b, eps) when s is an affine hyperplane {y : tr(b*y) = eps}."""
    elems = np.fromiter(set(int(y) for y in s), dtype=np.uint32)
    n = ctx.n
    if elems.size != 1 << (n - 1):
        return None
    y0 = int(elems.min())
    shifted = elems ^ np.uint32(y0)
    # Distinct elements of full size force rank >= n-1; find a spanning basis.
    basis = []
    pivots = []
    for y in shifted:
        v = int(y)
        for p, bvec in zip(pivots, basis):
            if (v >> p) & 1:
                v ^= bvec
        if v:
            pivots.append(v.bit_length() - 1)
            basis.append(v)
            if len(basis) == n:
                return None  # spans everything: not a hyperplane
            if len(basis) == n - 1:
                break
    if len(basis) < n - 1:
        return None
    null = gf2mat.nullspace_bits(basis, n)
    w = null[0]
    par = parity_table(n)
    sh_par = par[shifted & np.uint32(w)]
    if sh_par.any():
        return None  # some element escapes the candidate hyperplane
    b = _functional_to_trace(ctx, w)
    eps = int(par[y0 & w])
    return HyperplaneWitness(b=b, eps=eps)


@dataclass
class CrookedReport:
    is_crooked: bool
    witnesses: Dict[int, HyperplaneWitness]
    failed_at: Optional[int] = None  # first direction without a hyperplane, or
    failed_apn: bool = False         # True when the APN precondition broke


def is_crooked(f: TruthTable) -> CrookedReport:
    """APN plus: every nonzero-direction derivative image is an affine
    hyperplane. Witnesses are collected per direction."""
    if f.ctx.n > EXHAUSTIVE_MAX_N:
        raise InfeasibleSize(f"crooked sweep capped at n={EXHAUSTIVE_MAX_N}")
    if not is_apn(f):
        return CrookedReport(False, {}, failed_apn=True)
    witnesses: Dict[int, HyperplaneWitness] = {}
    for a in range(1, f.ctx.order):
        wit = hyperplane_of(f.ctx, np.unique(derivative_values(f, a)))
        if wit is None:
            return CrookedReport(False, witnesses, failed_at=a)
        witnesses[a] = wit
    return CrookedReport(True, witnesses)
