"""Hardy-Littlewood singular-series constants for prime pairs.

C2 is the twin-prime constant prod_{p>2} (1 - 1/(p-1)^2).  For a general
even gap 2r the pair constant is C2 times an exact rational that depends
only on the odd prime divisors of r; the prefix sums S_N = C2 + C4 + ...
+ C_{2N} drive the averaged pair-count comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import sieve

#: Reference value of the twin-prime constant, correct to the digits shown.
C2_REFERENCE = 0.6601618158


@dataclass(frozen=True)
class TwinPrimeConstant:
    """Truncated product for C2 with a rigorous truncation bound.

    value is the product over odd primes p <= prime_limit of 1 - 1/(p-1)^2;
    tail_bound bounds |value - C2| (truncation tail plus float accumulation).
    """

    value: float
    tail_bound: float
    prime_limit: int


@dataclass(frozen=True)
class HLRatio:
    """Exact rational C_{2r}/C2 = prod over odd primes p | r of (p-1)/(p-2)."""

    r: int
    numerator: int
    denominator: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __float__(self) -> float:
        return self.numerator / self.denominator


@dataclass(frozen=True)
class PrefixSums:
    """Prefix sums S_m/C2 for m = 1..N.

    s_over_c2[m] equals sum_{r<=m} C_{2r}/C2; entry 0 is 0.  Each entry is
    the correctly rounded float of an exact rational accumulation.
    """

    N: int
    s_over_c2: np.ndarray
    c2: TwinPrimeConstant


def twin_prime_constant(prime_limit: int) -> TwinPrimeConstant:
    """Direct product for C2 over odd primes <= prime_limit.

    The tail bound is the crude estimate sum_{n > P} 2/(n-1)^2 <= 2/(P-1)
    on the omitted log-factors, plus a small allowance for float rounding
    in the accumulated product.  The truncated product always sits above
    the true constant.
    """
    if prime_limit < 3:
        raise ValueError(f"prime_limit must be >= 3, got {prime_limit}")
    odd_primes = 2.0 * np.flatnonzero(sieve.odd_bitmap(prime_limit)) + 1.0
    factors = 1.0 - 1.0 / (odd_primes - 1.0) ** 2
    value = float(np.multiply.reduce(factors))
    tail = 2.0 / (prime_limit - 1)
    rounding = 4.0 * len(factors) * 2.0**-53
    return TwinPrimeConstant(value=value, tail_bound=tail + rounding, prime_limit=prime_limit)


def ratio(r: int) -> HLRatio:
    """Exact C_{2r}/C2 as a reduced fraction.

    Only the odd prime divisors of r contribute, so the value is invariant
    under multiplying r by powers of 2 and equals 1 exactly when r is a
    power of 2.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    frac = Fraction(1)
    d = r
    while d % 2 == 0:
        d //= 2
    p = 3
    while p * p <= d:
        if d % p == 0:
            frac *= Fraction(p - 1, p - 2)
            while d % p == 0:
                d //= p
        p += 2
    if d > 1:  # leftover odd prime factor > sqrt
        frac *= Fraction(d - 1, d - 2)
    return HLRatio(r=r, numerator=frac.numerator, denominator=frac.denominator)


def prefix_sums(N: int, prime_limit: int = 10**6) -> PrefixSums:
    """S_m/C2 for all m <= N, accumulated in exact rational arithmetic.

    Exact accumulation keeps the 7-decimal published values reproducible;
    each float entry carries only its final rounding error.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    out = np.zeros(N + 1, dtype=np.float64)
    acc = Fraction(0)
    for r in range(1, N + 1):
        acc += ratio(r).as_fraction()
        out[r] = float(acc)
    return PrefixSums(N=N, s_over_c2=out, c2=twin_prime_constant(prime_limit))


def fg_deviation(m: int, sums: PrefixSums | None = None) -> float:
    """Deviation S_m - m + (1/2) log m of the singular-series average.

    The second-order term -(1/2) log m is subtracted along with the main
    term, so the result should stay O(log^{2/3} m) in magnitude.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if sums is None or sums.N < m:
        sums = prefix_sums(m)
    s_m = sums.c2.value * float(sums.s_over_c2[m])
    return s_m - m + 0.5 * math.log(m)


@dataclass(frozen=True)
class HLConstants:
    """Bundle of the constants the analysis layer needs for one run."""

    c2: TwinPrimeConstant
    prefix: PrefixSums

    def ratio(self, r: int) -> HLRatio:
        return ratio(r)

    def s_over_c2(self, m: int) -> float:
        if not 1 <= m <= self.prefix.N:
            raise ValueError(f"m out of range [1, {self.prefix.N}]: {m}")
        return float(self.prefix.s_over_c2[m])

    def c2r(self, r: int) -> float:
        """The pair constant C_{2r} itself."""
        return self.c2.value * float(ratio(r))


def hl_constants(N: int, prime_limit: int = 10**8) -> HLConstants:
    """Constants bundle for gaps up to 2N.

    The default prime_limit keeps the C2 truncation error near 1e-9 so it
    never shows up in 5-decimal error-function output.
    """
    c2 = twin_prime_constant(prime_limit)
    pre = prefix_sums(N, prime_limit=min(prime_limit, 10**6))
    return HLConstants(c2=c2, prefix=PrefixSums(N=pre.N, s_over_c2=pre.s_over_c2, c2=c2))
