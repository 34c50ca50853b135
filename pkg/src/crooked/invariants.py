"""CCZ-equivalence invariants and comparison reports: differential spectrum,
extended Walsh spectrum, and the GF(2) ranks of the graph / difference-set
development matrices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from . import gf2mat
from .errors import DegreeMismatch, InfeasibleSize
from .spectral import walsh_spectrum
from .vbf import TruthTable, differential_spectrum

RANK_MAX_N = 7  # development matrices are 2^(2n) square

_CHUNK_ROWS = 1024


def graph_points(f: TruthTable) -> np.ndarray:
    """G_f = {(x, f(x))} packed as x*2^n + f(x)."""
    xs = np.arange(f.ctx.order, dtype=np.uint32)
    return (xs << np.uint32(f.ctx.n)) | f.values


def difference_points(f: TruthTable) -> np.ndarray:
    """D_f = {(a, f(x)+f(x+a)) : a != 0} packed as a*2^n + value."""
    n = f.ctx.n
    order = f.ctx.order
    xs = np.arange(order, dtype=np.uint32)
    pts = set()
    for a in range(1, order):
        dv = np.unique(f.values ^ f.values[xs ^ np.uint32(a)])
        pts.update(((a << n) | int(v)) for v in dv)
    return np.fromiter(sorted(pts), dtype=np.uint32)


def development_rank(two_n: int, points: np.ndarray) -> int:
    """GF(2) rank of the 2^(2n)-square incidence matrix whose row g is the
    indicator vector of the translate S + g of the point set."""
    size = 1 << two_n
    blocks = []
    for start in range(0, size, _CHUNK_ROWS):
        stop = min(start + _CHUNK_ROWS, size)
        chunk = np.zeros((stop - start, size), dtype=bool)
        for i, g in enumerate(range(start, stop)):
            chunk[i, points ^ np.uint32(g)] = True
        blocks.append(gf2mat.pack_rows(chunk))
    return gf2mat.rank_packed(np.vstack(blocks), size)


def gamma_rank(f: TruthTable) -> int:
    """Rank of the graph development matrix; CCZ-invariant."""
    if f.ctx.n > RANK_MAX_N:
        raise InfeasibleSize(f"gamma rank capped at n={RANK_MAX_N}")
    return development_rank(2 * f.ctx.n, graph_points(f))


def delta_rank(f: TruthTable) -> int:
    """Rank of the difference-set development matrix; CCZ-invariant."""
    if f.ctx.n > RANK_MAX_N:
        raise InfeasibleSize(f"delta rank capped at n={RANK_MAX_N}")
    return development_rank(2 * f.ctx.n, difference_points(f))


@dataclass(frozen=True)
class FunctionInvariants:
    delta: int
    diff_spectrum: Counter
    extended_walsh: Counter
    nl: int
    gamma_rank: Optional[int] = None
    delta_rank: Optional[int] = None


@dataclass(frozen=True)
class InvariantReport:
    left: FunctionInvariants
    right: FunctionInvariants
    depth: str
    verdict: str  # "distinguished" | "indistinguishable-by-computed-invariants"

    @property
    def distinguished(self) -> bool:
        return self.verdict == "distinguished"


def function_invariants(f: TruthTable, with_ranks: bool) -> FunctionInvariants:
    delta, dspec = differential_spectrum(f)
    summary = walsh_spectrum(f)
    return FunctionInvariants(
        delta=delta,
        diff_spectrum=dspec,
        extended_walsh=summary.extended,
        nl=summary.nl,
        gamma_rank=gamma_rank(f) if with_ranks else None,
        delta_rank=delta_rank(f) if with_ranks else None,
    )


def compare(fa: TruthTable, fb: TruthTable, depth: str = "spectra") -> InvariantReport:
    """Invariant comparison; "distinguished" proves CCZ-inequivalence (hence
    EA-inequivalence), while the other verdict is explicitly inconclusive."""
    if depth not in ("spectra", "spectra+ranks"):
        raise ValueError(f"unknown depth {depth!r}")
    if fa.ctx != fb.ctx:
        raise DegreeMismatch("functions live over different fields")
    with_ranks = depth == "spectra+ranks"
    left = function_invariants(fa, with_ranks)
    right = function_invariants(fb, with_ranks)
    differs = (
        left.diff_spectrum != right.diff_spectrum
        or left.extended_walsh != right.extended_walsh
        or (with_ranks and left.gamma_rank != right.gamma_rank)
        or (with_ranks and left.delta_rank != right.delta_rank)
    )
    verdict = "distinguished" if differs else "indistinguishable-by-computed-invariants"
    return InvariantReport(left=left, right=right, depth=depth, verdict=verdict)
