"""Exact number-theoretic tables and coprime-pair sums.

Provides the arithmetic backbone for the counting formulas:

    mu(s)       Moebius function, sieved
    phi(s)      Euler totient, sieved
    Phi(k)   =  sum_{i<=k} phi(i)                 (integer)
    Psi(k)   =  sum_{i<=k} phi(i)/i               (exact rational)
    U(p, q)  =  #{(a, b) : 1<=a<=p, 1<=b<=q, gcd(a, b) = 1}
    V(t, k)  =  sum over coprime (i, j), i<=ceil(t), j<=ceil(k),
                of (t + 1 - i)(k + 1 - j)

V is defined for half-integer arguments.  Half-integers are carried as
doubled integers (HalfInt) and V is returned as a quadrupled integer
(QuarterInt): the counting formulas only ever consume 2V, 4V and 8V, so
every public count stays an exact integer and no rational type leaks out.

Each quantity has a naive evaluation straight from its definition and a
Moebius-accelerated one.  The naive forms are the oracles; the fast forms
are what production counting uses:

    U(t, k) = sum_s mu(s) * floor(t/s) * floor(k/s)
    V(t, k) = sum_d mu(d) * A(t, d) * A(k, d),
              A(t, d) = sum_{i=1}^{floor(ceil(t)/d)} (t + 1 - d*i)

All fast-path arithmetic is exact: products of doubled A-values are
evaluated in int64 limbs (split + chunked accumulation into Python ints)
with the overflow envelope checked, never assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import CapacityError

HalfIntLike = Union[int, Fraction, "HalfInt"]

# v_fast splits doubled A-values into limbs of ceil(bits/2); partial sums of
# limb products must stay below 2^62.  bits <= 56 keeps every chunk >= 32
# elements, which covers arguments up to ~2.6e8.
_MAX_DOUBLED_A_BITS = 56


@dataclass(frozen=True, order=True)
class HalfInt:
    """A number of the form doubled/2, exact.

    Used for the half-integer arguments (m-1)/2, (n-1)/2 of V.  Values down
    to -1 (doubled = -2) are accepted because they arise from degenerate
    grids and make V an empty sum.
    """

    doubled: int

    @classmethod
    def coerce(cls, x: HalfIntLike) -> "HalfInt":
        if isinstance(x, HalfInt):
            return x
        if isinstance(x, int):
            return cls(2 * x)
        if isinstance(x, Fraction):
            twice = 2 * x
            if twice.denominator != 1:
                raise ValueError(f"{x} is not an integer or half-integer")
            return cls(int(twice))
        raise TypeError(f"cannot interpret {x!r} as a half-integer")

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)

    @property
    def ceil(self) -> int:
        return -((-self.doubled) // 2)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def __repr__(self) -> str:
        if self.is_integer:
            return f"HalfInt({self.doubled // 2})"
        return f"HalfInt({self.doubled}/2)"


@dataclass(frozen=True, order=True)
class QuarterInt:
    """A number of the form quadrupled/4, exact.

    The product of two half-integers has denominator 4; V at half-integer
    arguments is therefore returned in quadrupled units.
    """

    quadrupled: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.quadrupled, 4)

    @property
    def is_integer(self) -> bool:
        return self.quadrupled % 4 == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self.value} is not an integer")
        return self.quadrupled // 4

    def __repr__(self) -> str:
        if self.is_integer:
            return f"QuarterInt({self.quadrupled // 4})"
        return f"QuarterInt({self.quadrupled}/4)"


@dataclass(frozen=True, eq=False)
class NTTables:
    """Sieved arithmetic tables up to ``limit``, immutable once built.

    mu and phi are indexed 1..limit (index 0 is a zero sentinel).  Phi is
    the cumulative totient.  Psi is exposed through :meth:`psi` as an exact
    Fraction, materialised lazily: an eager array of exact Psi values is
    impossible at large limits (the reduced denominator of Psi(k) grows
    like lcm(1..k)), while the float view ``psi_float`` is always eager.
    The arrays are read-only, so a single instance is safe to share across
    threads.
    """

    limit: int
    mu: np.ndarray
    phi: np.ndarray
    Phi: np.ndarray
    psi_float: np.ndarray
    _psi_cache: list[Fraction] = field(default_factory=list, repr=False, compare=False)

    def psi(self, k: int) -> Fraction:
        """Exact Psi(k) = sum_{i<=k} phi(i)/i."""
        if not 1 <= k <= self.limit:
            raise ValueError(f"psi argument {k} outside 1..{self.limit}")
        cache = self._psi_cache
        if not cache:
            cache.append(Fraction(0))
        while len(cache) <= k:
            i = len(cache)
            cache.append(cache[-1] + Fraction(int(self.phi[i]), i))
        return cache[k]


def sieve(limit: int) -> NTTables:
    """Build mu, phi, Phi and the Psi views up to ``limit``.

    Linear-in-output vectorised sieve: primes up to sqrt(limit) strip small
    factors; whatever cofactor remains is 1 or a single prime > sqrt(limit),
    fixed up in one vector pass.  Runs in ~0.1 s at limit = 10^6.
    """
    if limit < 1:
        raise ValueError(f"sieve limit must be >= 1, got {limit}")
    n = limit
    mu = np.ones(n + 1, dtype=np.int8)
    phi = np.ones(n + 1, dtype=np.int64)
    small = np.ones(n + 1, dtype=np.int64)  # product of p^a over primes p <= sqrt(n)
    root = math.isqrt(n)
    composite = np.zeros(root + 1, dtype=bool)
    for p in range(2, root + 1):
        if composite[p]:
            continue
        composite[p * p :: p] = True
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
        phi[p::p] *= p - 1
        small[p::p] *= p
        pk = p * p
        while pk <= n:
            phi[pk::pk] *= p
            small[pk::pk] *= p
            pk *= p
    cofactor = np.arange(n + 1, dtype=np.int64) // small
    big = cofactor > 1  # exactly one prime factor > sqrt(n) remains
    mu[big] *= -1
    phi[big] *= cofactor[big] - 1
    mu[0] = 0
    phi[0] = 0
    Phi = np.cumsum(phi)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = phi.astype(np.float64)
        ratios[1:] /= np.arange(1, n + 1, dtype=np.float64)
        ratios[0] = 0.0
    psi_float = np.cumsum(ratios)
    for arr in (mu, phi, Phi, psi_float):
        arr.flags.writeable = False
    return NTTables(limit=n, mu=mu, phi=phi, Phi=Phi, psi_float=psi_float)


def u_naive(p: int, q: int) -> int:
    """U(p, q) by the definition: count gcd(i, j) = 1 over [1,p] x [1,q].

    Empty ranges give 0.  Quadratic work, vectorised; the independent
    oracle for u_mobius.
    """
    if p < 0 or q < 0:
        raise ValueError("U is defined for non-negative arguments")
    if p == 0 or q == 0:
        return 0
    b = np.arange(1, q + 1, dtype=np.int64)
    total = 0
    # chunk rows to bound the gcd matrix at ~4e6 entries
    step = max(1, 4_000_000 // q)
    for lo in range(1, p + 1, step):
        a = np.arange(lo, min(lo + step, p + 1), dtype=np.int64)
        total += int(np.count_nonzero(np.gcd.outer(a, b) == 1))
    return total


def u_mobius(t: int, k: int, tables: NTTables) -> int:
    """U(t, k) via Moebius inversion: sum_s mu(s) floor(t/s) floor(k/s).

    Linear in min(t, k); equals u_naive exactly.
    """
    if t < 0 or k < 0:
        raise ValueError("U is defined for non-negative arguments")
    s_max = min(t, k)
    if s_max == 0:
        return 0
    if tables.limit < s_max:
        raise ValueError(f"sieve limit {tables.limit} < min(t, k) = {s_max}")
    if t * k > 4 * 10**18:
        raise CapacityError(f"U({t}, {k}) exceeds the checked int64 envelope")
    s = np.arange(1, s_max + 1, dtype=np.int64)
    terms = (t // s) * (k // s) * tables.mu[1 : s_max + 1]
    return int(terms.sum())


def _v_prepare(t: HalfIntLike, k: HalfIntLike) -> tuple[int, int, int, int]:
    th, kh = HalfInt.coerce(t), HalfInt.coerce(k)
    if th.doubled < -2 or kh.doubled < -2:
        raise ValueError(f"V arguments must be >= -1, got ({th.value}, {kh.value})")
    return th.doubled, kh.doubled, th.ceil, kh.ceil


def v_naive(t: HalfIntLike, k: HalfIntLike) -> QuarterInt:
    """V(t, k) straight from the definition, in quadrupled units.

    4*(t + 1 - i)(k + 1 - j) = (T + 2 - 2i)(K + 2 - 2j) with T = 2t, K = 2k,
    so the double loop is pure integer arithmetic.  Symmetric in (t, k);
    the independent oracle for v_fast.
    """
    T, K, ct, ck = _v_prepare(t, k)
    if ct <= 0 or ck <= 0:
        return QuarterInt(0)
    i = np.arange(1, ct + 1, dtype=np.int64)
    j = np.arange(1, ck + 1, dtype=np.int64)
    wt = (T + 2) - 2 * i
    wk = (K + 2) - 2 * j
    total = 0
    step = max(1, 4_000_000 // ck)
    for lo in range(0, ct, step):
        hi = min(lo + step, ct)
        coprime = np.gcd.outer(i[lo:hi], j) == 1
        total += int(np.sum(np.where(coprime, wt[lo:hi, None] * wk[None, :], 0)))
    return QuarterInt(total)


def v_fast(t: HalfIntLike, k: HalfIntLike, tables: NTTables) -> QuarterInt:
    """V(t, k) via Moebius inversion, linear in ceil(min(t, k)).

    4V = sum_d mu(d) * (2A(t, d)) * (2A(k, d)) where
    2A(t, d) = c * (2t + 2 - d*(c + 1)),  c = floor(ceil(t)/d),
    and 2A(t, d) = 0 for d > ceil(t), which caps the summation index.
    """
    T, K, ct, ck = _v_prepare(t, k)
    d_max = min(ct, ck)
    if d_max <= 0:
        return QuarterInt(0)
    if tables.limit < d_max:
        raise ValueError(f"sieve limit {tables.limit} < ceil(min(t, k)) = {d_max}")
    d = np.arange(1, d_max + 1, dtype=np.int64)
    qt = ct // d
    qk = ck // d
    a_t = qt * ((T + 2) - d * (qt + 1))  # doubled A(t, d), always >= 0
    a_k = qk * ((K + 2) - d * (qk + 1))
    mu_d = tables.mu[1 : d_max + 1].astype(np.int64)
    return QuarterInt(_signed_product_sum(mu_d, a_t, a_k))


def _signed_product_sum(sign: np.ndarray, a: np.ndarray, b: np.ndarray) -> int:
    """Exact sum(sign * a * b) for non-negative int64 a, b.

    a*b can exceed int64, so each factor is split into high/low limbs and
    the three partial sums are accumulated per chunk into Python ints.
    Chunk length is chosen so no partial sum can reach 2^62.
    """
    bits = int(max(a.max(), b.max())).bit_length()
    if bits > _MAX_DOUBLED_A_BITS:
        raise CapacityError("arguments exceed the checked int64 envelope of v_fast")
    shift = (bits + 1) // 2
    low_mask = (1 << shift) - 1
    chunk = 1 << (61 - 2 * shift) if shift else len(a)
    total = 0
    for lo in range(0, len(a), chunk):
        sl = slice(lo, lo + chunk)
        sg = sign[sl]
        ah, al = a[sl] >> shift, a[sl] & low_mask
        bh, bl = b[sl] >> shift, b[sl] & low_mask
        s_hh = int(np.sum(sg * (ah * bh)))
        s_mid = int(np.sum(sg * (ah * bl + al * bh)))
        s_ll = int(np.sum(sg * (al * bl)))
        total += (s_hh << (2 * shift)) + (s_mid << shift) + s_ll
    return total
