"""Segmented sieve of Eratosthenes and deterministic 64-bit primality testing.

The sieve streams `PrimeSegment` values covering [2, limit] in order, so
consumers can process prime ranges far larger than memory.  A shared odd-only
bitmap kernel backs both the streaming API and the bulk helpers used by the
pair-counting pipeline.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

DEFAULT_SEGMENT_SIZE = 1 << 20

# Instrumentation for cache-idempotence checks: incremented for every segment
# actually sieved.  Read via counters(), cleared via reset_counters().
_COUNTERS = {"segments_sieved": 0}


def counters() -> dict:
    """Snapshot of sieve work counters (used to verify warm-cache runs)."""
    return dict(_COUNTERS)


def reset_counters() -> None:
    for key in _COUNTERS:
        _COUNTERS[key] = 0


@dataclass(frozen=True)
class SieveConfig:
    """Sieving parameters.

    segment_size is in integers (not bits); when the sieve feeds pair
    counting with maximum gap g, segment_size must be at least 2*g so a
    pair always fits inside one segment plus its overlap window.
    """

    limit: int
    segment_size: int = DEFAULT_SEGMENT_SIZE
    worker_count: int = 1

    def __post_init__(self) -> None:
        if self.segment_size < 16:
            raise ValueError(f"segment_size too small: {self.segment_size}")
        if self.worker_count < 1:
            raise ValueError(f"worker_count must be >= 1, got {self.worker_count}")


@dataclass(frozen=True)
class PrimeSegment:
    """Primality bitmap over the half-open interval [lo, hi).

    bits[i] is True exactly when lo + i is prime.
    """

    lo: int
    hi: int
    bits: np.ndarray

    def primes(self) -> np.ndarray:
        """Primes in [lo, hi) as an int64 array."""
        return self.lo + np.flatnonzero(self.bits)

    def __len__(self) -> int:
        return self.hi - self.lo


def odd_bitmap(limit: int) -> np.ndarray:
    """Bool array b with b[i] == (2*i + 1 is prime), covering odd numbers <= limit.

    The index convention i <-> 2i+1 is shared by the pair-counting kernel.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    m = (limit + 1) // 2
    bits = np.ones(m, dtype=bool)
    bits[0] = False  # 1 is not prime
    i = 1
    while True:
        p = 2 * i + 1
        if p * p > limit:
            break
        if bits[i]:
            bits[(p * p) // 2:: p] = False
        i += 1
    _COUNTERS["segments_sieved"] += 1
    return bits


def _odd_base_primes(limit: int) -> np.ndarray:
    """Odd primes <= limit, for striking composites in segments."""
    bits = odd_bitmap(limit)
    return 2 * np.flatnonzero(bits) + 1


def _sieve_range(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Full-resolution primality bits over [lo, hi) given odd base primes."""
    n = hi - lo
    bits = np.zeros(n, dtype=bool)
    first_odd = lo | 1
    if first_odd < hi:
        bits[first_odd - lo:: 2] = True
    if lo <= 1 < hi:
        bits[1 - lo] = False
    if lo <= 2 < hi:
        bits[2 - lo] = True
    for p in base:
        p = int(p)
        if p * p >= hi:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start % 2 == 0:  # even multiples are already unmarked
            start += p
        if start < hi:
            bits[start - lo:: 2 * p] = False
    return bits


def primes_up_to(limit: int, config: SieveConfig | None = None) -> Iterator[PrimeSegment]:
    """Stream PrimeSegments whose concatenation covers [2, limit] exactly once.

    Segments arrive in ascending order regardless of worker scheduling.
    Raises ValueError for limit < 2 (empty range).
    """
    if limit < 2:
        raise ValueError(f"empty range: limit must be >= 2, got {limit}")
    if config is None:
        config = SieveConfig(limit=limit)
    base = _odd_base_primes(max(3, math.isqrt(limit)))
    spans = []
    lo = 2
    while lo <= limit:
        hi = min(lo + config.segment_size, limit + 1)
        spans.append((lo, hi))
        lo = hi

    def job(span: tuple) -> PrimeSegment:
        s_lo, s_hi = span
        bits = _sieve_range(s_lo, s_hi, base)
        _COUNTERS["segments_sieved"] += 1
        return PrimeSegment(s_lo, s_hi, bits)

    if config.worker_count == 1:
        for span in spans:
            yield job(span)
    else:
        yield from _ordered_map(job, spans, config.worker_count)


def _ordered_map(fn: Callable, items: Sequence, workers: int) -> Iterator:
    """Run fn over items on a thread pool, yielding results in input order.

    Bounded prefetch keeps at most 2*workers results buffered, so streaming
    over huge ranges stays memory-flat.
    """
    prefetch = 2 * workers
    with ThreadPoolExecutor(max_workers=workers) as pool:
        pending: deque = deque()
        it = iter(items)
        for item in it:
            pending.append(pool.submit(fn, item))
            if len(pending) >= prefetch:
                break
        while pending:
            fut = pending.popleft()
            for item in it:
                pending.append(pool.submit(fn, item))
                break
            yield fut.result()


def prime_count(x: int, config: SieveConfig | None = None) -> int:
    """Exact count of primes <= x."""
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    if x < 2:
        return 0
    total = 0
    for seg in primes_up_to(x, config):
        total += int(np.count_nonzero(seg.bits))
    return total


def primes_array(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (2 included)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    odds = 2 * np.flatnonzero(odd_bitmap(limit)) + 1
    return np.concatenate(([2], odds)).astype(np.int64)


# Deterministic Miller-Rabin witness tiers.  Each (bound, witnesses) row is
# valid for all n < bound; the final row covers the full 64-bit range.
_MR_TIERS = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (1 << 64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

_TRIAL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime_u64(n: int) -> bool:
    """Deterministic primality verdict for 0 <= n < 2**64.

    Uses fixed Miller-Rabin witness sets proven exhaustive for each tier,
    so the answer is never probabilistic.
    """
    if not 0 <= n < (1 << 64):
        raise ValueError(f"n out of range [0, 2**64): {n}")
    if n < 2:
        return False
    for p in _TRIAL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for bound, witnesses in _MR_TIERS:
        if n < bound:
            break
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_FILTER_PRIMES = np.array(
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
     67, 71, 73, 79, 83, 89, 97],
    dtype=np.int64,
)

# Second-stage bound balances the cost of the extra division passes
# against the Miller-Rabin calls they save; ~2000 is the sweet spot.
_DEEP_FILTER_LIMIT = 2_048
_deep_filter_cache: np.ndarray | None = None


def _deep_filter_primes() -> np.ndarray:
    global _deep_filter_cache
    if _deep_filter_cache is None:
        odds = 2 * np.flatnonzero(odd_bitmap(_DEEP_FILTER_LIMIT)) + 1
        _deep_filter_cache = odds[odds > int(_FILTER_PRIMES[-1])].astype(np.int64)
    return _deep_filter_cache


def prime_mask_u64(values: np.ndarray) -> np.ndarray:
    """Vectorised primality for an int64 array; entries < 2 map to False.

    A small-prime residue filter removes ~85% of composites cheaply; for
    bulk inputs the survivors pass through a second, compacted filter up
    to 10^4 before the per-element deterministic test, which dominates
    the cost otherwise.
    """
    vals = np.asarray(values, dtype=np.int64)
    mask = vals >= 2
    alive = mask.copy()
    for p in _FILTER_PRIMES:
        hit = alive & (vals % p == 0)
        if hit.any():
            mask[hit] = vals[hit] == p
            alive[hit] = False
    idx = np.flatnonzero(alive)
    if idx.size > 65536:
        sub = vals[idx].copy()
        sub_alive = np.ones(idx.size, dtype=bool)
        for p in _deep_filter_primes():
            hit = sub % int(p) == 0
            if hit.any():
                mask[idx[hit]] = sub[hit] == p
                sub_alive[hit] = False
                sub[hit] = 1  # never divisible again, drops out of later passes
        idx = idx[sub_alive]
    if idx.size > 1024 and int(vals[idx].max(initial=0)) < _VEC_MR_BOUND:
        mask[idx] = ~_mr_composite_small(vals[idx])
    else:
        for i in idx:
            mask[i] = is_prime_u64(int(vals[i]))
    return mask


# Vectorised Miller-Rabin for filter survivors below 2**40.  The witness
# set {2,...,13} is proven exhaustive far beyond that bound, and 20-bit
# limb splitting keeps every intermediate product inside uint64, so the
# verdicts are exactly those of is_prime_u64.
_VEC_MR_BOUND = 1 << 40
_VEC_MR_WITNESSES = (2, 3, 5, 7, 11, 13)
_U1 = np.uint64(1)
_U20 = np.uint64(20)
_LO20 = np.uint64((1 << 20) - 1)


def _mulmod_40(a: np.ndarray, b: np.ndarray, n: np.ndarray) -> np.ndarray:
    """a*b mod n elementwise for values < 2**40, exact in uint64."""
    hi = (a * (b >> _U20)) % n
    return ((hi << _U20) + a * (b & _LO20)) % n


def _powmod_40(a: int, d: np.ndarray, n: np.ndarray) -> np.ndarray:
    """a**d mod n elementwise (scalar base, vector exponent), values < 2**40."""
    x = np.ones_like(n)
    base = np.full_like(n, a) % n
    exp = d.copy()
    while True:
        odd = (exp & _U1).astype(bool)
        if odd.any():
            x = np.where(odd, _mulmod_40(x, base, n), x)
        exp = exp >> _U1
        if not exp.any():
            return x
        base = _mulmod_40(base, base, n)


def _mr_composite_small(values: np.ndarray) -> np.ndarray:
    """True where composite, for odd values in (13, 2**40) coprime to the
    witness primes (guaranteed for residue-filter survivors)."""
    n = values.astype(np.uint64)
    t = n - _U1
    lsb = t & (~t + _U1)
    s = np.log2(lsb.astype(np.float64)).astype(np.int64)  # exact: lsb is a power of 2
    d = t >> s.astype(np.uint64)
    s_max = int(s.max())
    composite = np.zeros(n.shape, dtype=bool)
    for a in _VEC_MR_WITNESSES:
        x = _powmod_40(a, d, n)
        good = (x == _U1) | (x == t)
        cur = x
        for j in range(1, s_max):
            cur = _mulmod_40(cur, cur, n)
            good |= (cur == t) & (j < s)
        composite |= ~good
    return composite
