"""Polynomials over GF(2^n): Euclidean arithmetic, irreducibility, and the
kernel test for linearized maps y -> sum_k y^(2^k)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from . import gf2mat
from .errors import InvalidInput, InvalidModulus, UndefinedGcd
from .field import FieldCtx, trial_factor


@dataclass(frozen=True)
class Poly:
    """Polynomial over GF(2^n); coeffs[i] is the coefficient of x^i."""

    ctx: FieldCtx
    coeffs: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.ctx.mul(acc, x) ^ c
        return acc


def poly(ctx: FieldCtx, coeffs: Iterable[int]) -> Poly:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return Poly(ctx, tuple(cs))


def poly_x(ctx: FieldCtx) -> Poly:
    return Poly(ctx, (0, 1))


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a.coeffs), len(b.coeffs))
    cs = [0] * n
    for i, c in enumerate(a.coeffs):
        cs[i] ^= c
    for i, c in enumerate(b.coeffs):
        cs[i] ^= c
    return poly(a.ctx, cs)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return Poly(a.ctx, ())
    ctx = a.ctx
    cs = [0] * (a.degree + b.degree + 1)
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                if cb:
                    cs[i + j] ^= ctx.mul(ca, cb)
    return poly(ctx, cs)


def poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    if b.is_zero:
        raise InvalidModulus("division by the zero polynomial")
    ctx = a.ctx
    rem = list(a.coeffs)
    db = b.degree
    lead_inv = ctx.inv(b.coeffs[-1])
    quot = [0] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        if rem[i]:
            f = ctx.mul(rem[i], lead_inv)
            quot[i - db] = f
            for j, cb in enumerate(b.coeffs):
                rem[i - db + j] ^= ctx.mul(f, cb)
    return poly(ctx, quot), poly(ctx, rem[:db])


def poly_mod(a: Poly, b: Poly) -> Poly:
    return poly_divmod(a, b)[1]


def poly_monic(a: Poly) -> Poly:
    if a.is_zero or a.coeffs[-1] == 1:
        return a
    inv = a.ctx.inv(a.coeffs[-1])
    return Poly(a.ctx, tuple(a.ctx.mul(inv, c) for c in a.coeffs))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via Euclid's algorithm."""
    if a.is_zero and b.is_zero:
        raise UndefinedGcd("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, poly_mod(a, b)
    return poly_monic(a)


def poly_powmod(base: Poly, e: int, mod: Poly) -> Poly:
    """base^e mod `mod`, square and multiply; e >= 0."""
    if mod.is_zero:
        raise InvalidModulus("zero modulus")
    if e < 0:
        raise InvalidInput("negative exponent")
    r = poly(base.ctx, [1])
    b = poly_mod(base, mod)
    while e:
        if e & 1:
            r = poly_mod(poly_mul(r, b), mod)
        b = poly_mod(poly_mul(b, b), mod)
        e >>= 1
    return r


def is_irreducible_over(ctx: FieldCtx, p: Poly) -> bool:
    """Rabin irreducibility of p over GF(2^n).

    Degree-0 polynomials return False: a nonzero constant is a unit, not an
    irreducible. Callers that treat units as vacuously acceptable (the
    exponent-set polynomial with K = {0} collapses to the constant 1) should
    test p.degree == 0 themselves.
    """
    if p.is_zero:
        raise InvalidInput("zero polynomial")
    d = p.degree
    if d == 0:
        return False
    if d == 1:
        return True
    q = 1 << ctx.n
    x = poly_x(ctx)
    # frob[k] = x^(q^k) mod p, built by iterated q-th powering.
    frob = {0: poly_mod(x, p)}
    for k in range(1, d + 1):
        frob[k] = poly_powmod(frob[k - 1], q, p)
    if not poly_add(frob[d], poly_mod(x, p)).is_zero:
        return False
    for r in {f for f, _ in trial_factor(d)}:
        h = poly_add(frob[d // r], poly_mod(x, p))
        if h.is_zero or poly_gcd(h, p).degree != 0:
            return False
    return True


@dataclass(frozen=True)
class ExponentSet:
    """Strictly increasing indices K in [0, n-1], K nonempty, K != {0, 1}."""

    K: Tuple[int, ...]

    def __post_init__(self):
        if not self.K:
            raise InvalidInput("K must be nonempty")
        if list(self.K) != sorted(set(self.K)):
            raise InvalidInput("K must be strictly increasing")
        if self.K == (0, 1):
            raise InvalidInput("K = {0, 1} is excluded")


def exponent_poly(ctx: FieldCtx, K: Sequence[int]) -> Poly:
    """sum over k in K of x^(2^k - 1)."""
    cs = [0] * (1 << (max(K) if K else 0))
    cs.append(0)
    for k in K:
        cs[(1 << k) - 1] ^= 1
    return poly(ctx, cs)


def linearized_is_bijective(ctx: FieldCtx, K: Sequence[int]) -> bool:
    """True iff y -> sum_k y^(2^k) is a bijection of GF(2^n).

    Decided by the GF(2) rank of the map's matrix over the polynomial basis;
    rank n means trivial kernel, which is the condition the crooked-family
    constructions actually need from K.
    """
    ks = list(K)
    if any(k < 0 or k >= ctx.n for k in ks):
        raise InvalidInput(f"K indices must lie in [0, {ctx.n - 1}]")
    cols: List[int] = []
    for j in range(ctx.n):
        img = 0
        for k in ks:
            img ^= ctx.pow(1 << j, 1 << k)
        cols.append(img)
    return gf2mat.rank_bits(cols, ctx.n) == ctx.n
