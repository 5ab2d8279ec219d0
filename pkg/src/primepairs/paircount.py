"""Multi-gap, multi-checkpoint prime-pair counting and weighted pair sums.

count_pairs scans one primality bitmap and produces pi_{2r}(x) for every
half-gap r <= N and every checkpoint x in a single pass.  A pair (p, p+2r)
is attributed to its smaller member, so "count at x" always means p <= x
even when p + 2r lands beyond x.

The kernel packs the odd-only bitmap into bytes once per segment and uses
popcount over byte-aligned AND for each shift, which turns the O(N * x)
bit work into a few milliseconds per gap at x = 1e8.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import sieve
from .sieve import SieveConfig, is_prime_u64, prime_mask_u64, primes_array

# Largest x for which p*p + 2r stays inside int64 for the gap sizes we allow.
_SQUARE_SAFE_LIMIT = 3_037_000_499

ProgressFn = Callable[[int, int], None]


@dataclass(frozen=True)
class PairCountTable:
    """Matrix of pair counts: counts[r][j] = pi_{2r}(checkpoints[j]).

    Row 0 is unused padding so rows index directly by half-gap r.
    """

    checkpoints: tuple
    max_half_gap: int
    counts: np.ndarray

    def count(self, r: int, x: int) -> int:
        """pi_{2r}(x) for a stored half-gap and checkpoint."""
        if not 1 <= r <= self.max_half_gap:
            raise ValueError(f"half-gap r out of range [1, {self.max_half_gap}]: {r}")
        j = self._column_index(x)
        return int(self.counts[r, j])

    def column(self, x: int) -> np.ndarray:
        """All counts at checkpoint x, indexed by half-gap (entry 0 is 0)."""
        return self.counts[:, self._column_index(x)].copy()

    def _column_index(self, x: int) -> int:
        try:
            return self.checkpoints.index(x)
        except ValueError:
            raise ValueError(f"x={x} is not a stored checkpoint {self.checkpoints}") from None


def count_pairs(
    checkpoints: Sequence[int],
    max_half_gap: int,
    config: SieveConfig | None = None,
    progress: ProgressFn | None = None,
) -> PairCountTable:
    """Count prime pairs (p, p+2r) with p <= x for all r <= N and checkpoints x.

    The bitmap extends 2N past the last checkpoint so the larger member of
    every counted pair is always in view.  Work is split on segment
    boundaries that respect both the configured segment size and the
    checkpoint cuts; segments only ever read past their own end, so any
    segment size >= 2 * max gap and any worker count give identical counts.
    """
    cps = [int(x) for x in checkpoints]
    if not cps:
        raise ValueError("checkpoint list is empty")
    if any(b <= a for a, b in zip(cps, cps[1:])):
        raise ValueError(f"checkpoints must be strictly ascending: {cps}")
    if cps[0] < 3:
        raise ValueError(f"checkpoints must be >= 3, got {cps[0]}")
    N = int(max_half_gap)
    if N < 1:
        raise ValueError(f"max_half_gap must be >= 1, got {N}")
    if config is None:
        config = SieveConfig(limit=cps[-1] + 2 * N)
    if config.segment_size < 4 * N:
        raise ValueError(
            f"segment_size {config.segment_size} < 2 * max gap {4 * N}; "
            "pairs must fit inside one segment window"
        )

    x_max = cps[-1]
    bitmap_limit = x_max + 2 * N + 128
    bits = sieve.odd_bitmap(bitmap_limit)

    # Segment boundaries in odd-index space (index i <-> number 2i+1).
    cut_at = [(x - 1) // 2 + 1 for x in cps]  # odd numbers <= x
    seg_odd = max(config.segment_size // 2, 2 * N)
    bounds = {0}
    for b in cut_at:
        bounds.add(b)
    lo = 0
    for b in sorted(cut_at):
        while lo + seg_odd < b:
            lo += seg_odd
            bounds.add(lo)
        lo = b
    edges = sorted(bounds)
    segments = list(zip(edges, edges[1:]))
    col_of = np.searchsorted(cut_at, [b for _, b in segments])

    total = edges[-1]

    def scan(seg: tuple) -> np.ndarray:
        a, b = seg
        return _segment_pair_counts(bits, a, b, N)

    per_col = np.zeros((N + 1, len(cps)), dtype=np.int64)
    if config.worker_count == 1:
        results = map(scan, segments)
    else:
        pool = ThreadPoolExecutor(max_workers=config.worker_count)
        results = pool.map(scan, segments)
    done = 0
    for (a, b), vec, j in zip(segments, results, col_of):
        per_col[:, j] += vec
        done += b - a
        if progress is not None:
            progress(done, total)
    if config.worker_count > 1:
        pool.shutdown()

    counts = np.cumsum(per_col, axis=1)
    return PairCountTable(checkpoints=tuple(cps), max_half_gap=N, counts=counts)


def _segment_pair_counts(bits: np.ndarray, a: int, b: int, N: int) -> np.ndarray:
    """Pair counts with smaller-member odd index in [a, b), per half-gap.

    Counts popcount(A & shifted) where A is the packed window [a, b) and
    the shifted side is a byte-aligned slice of one of eight pre-packed
    bit-offset copies.  A's zero padding in its last byte masks the
    overhang, so the result is exact for every shift.
    """
    window = bits[a: b + N + 64]
    span = b - a
    packed = [np.packbits(window[s:]) for s in range(8)]
    anchor = np.packbits(window[:span])  # zero-padded to full bytes
    nb = anchor.size
    out = np.zeros(N + 1, dtype=np.int64)
    for r in range(1, N + 1):
        q, s = divmod(r, 8)
        out[r] = int(np.bitwise_count(anchor & packed[s][q: q + nb]).sum(dtype=np.int64))
    return out


def aggregate_Pi(table: PairCountTable, N: int, x: int) -> int:
    """Aggregate count Pi_N(x) = sum_{r<=N} pi_{2r}(x)."""
    if not 1 <= N <= table.max_half_gap:
        raise ValueError(f"N out of range [1, {table.max_half_gap}]: {N}")
    j = table._column_index(x)
    return int(np.sum(table.counts[1: N + 1, j], dtype=np.int64))


@dataclass(frozen=True)
class WeightedPairSums:
    """Log-weighted pair sums at one (x, r).

    theta      sums log^2 p over prime pairs (p, p+2r) with p <= x;
    psi        sums Lambda(n) Lambda(n+2r) over n <= x (prime powers included);
    theta_star sums log^2 p over p <= x with p^2+2r prime, plus the same
               for p^2-2r (a prime satisfying both contributes twice).
    """

    x: int
    r: int
    theta: float
    psi: float
    theta_star: float


def _prime_power_table(limit: int) -> tuple:
    """Prime powers p^k <= limit with their log p weights, by exact powers."""
    primes = primes_array(limit)
    ns = [primes]
    logs = [np.log(primes.astype(np.float64))]
    for p in primes[primes <= math.isqrt(limit)]:
        p = int(p)
        q = p * p
        lp = math.log(p)
        while q <= limit:
            ns.append(np.array([q], dtype=np.int64))
            logs.append(np.array([lp]))
            q *= p
    n_arr = np.concatenate(ns)
    log_arr = np.concatenate(logs)
    order = np.argsort(n_arr)
    return n_arr[order], log_arr[order]


def weighted_sums(x: int, r: int) -> WeightedPairSums:
    """theta, psi and theta_star at (x, r); see WeightedPairSums.

    Square candidates p^2 +- 2r are tested with deterministic Miller-Rabin,
    so x is capped where p^2 + 2r would overflow int64.
    """
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if x > _SQUARE_SAFE_LIMIT:
        raise ValueError(f"x too large for square candidates: {x} > {_SQUARE_SAFE_LIMIT}")

    bits = sieve.odd_bitmap(x + 2 * r)
    span = (x - 1) // 2 + 1  # odd numbers <= x

    # theta: both members prime, smaller member odd (p=2 never pairs).
    small = bits[:span]
    idx = np.flatnonzero(small & bits[r: span + r])
    logs = np.log(2.0 * idx + 1.0)
    theta = math.fsum((logs * logs).tolist())

    # psi: Lambda-weighted version over prime powers.
    pp_n, pp_log = _prime_power_table(x + 2 * r)
    lam = np.zeros(x + 2 * r + 1, dtype=np.float64)
    lam[pp_n] = pp_log
    lead = pp_n[pp_n <= x]
    prod = lam[lead] * lam[lead + 2 * r]
    psi = math.fsum(prod[prod > 0.0].tolist())

    # theta_star: p <= x with p^2 + 2r or p^2 - 2r prime (p = 2 included).
    primes = primes_array(x)
    sq = primes * primes
    lp = np.log(primes.astype(np.float64))
    lp2 = lp * lp
    star = 0.0
    for sign in (+1, -1):
        cand = sq + sign * 2 * r
        mask = prime_mask_u64(cand)
        star += math.fsum(lp2[mask].tolist())
    return WeightedPairSums(x=x, r=r, theta=theta, psi=psi, theta_star=star)


def theta_star_mean(
    x: int,
    N: int,
    progress: ProgressFn | None = None,
    chunk: int = 4096,
) -> float:
    """Average of theta_star(x, r)/(2x) over r = 1..N; conjectured limit 1.

    Tests all 2N square-offset candidates per prime in vectorised chunks.
    """
    if x < 100:
        raise ValueError(f"x must be >= 100, got {x}")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if x > _SQUARE_SAFE_LIMIT:
        raise ValueError(f"x too large for square candidates: {x} > {_SQUARE_SAFE_LIMIT}")
    primes = primes_array(x)
    offsets = np.concatenate(
        (np.arange(-2 * N, 0, 2, dtype=np.int64), np.arange(2, 2 * N + 1, 2, dtype=np.int64))
    )
    # Keep each candidate block around a few million entries.
    chunk = max(1, min(chunk, 4_000_000 // offsets.size))
    parts = []
    for start in range(0, primes.size, chunk):
        p = primes[start: start + chunk]
        lp = np.log(p.astype(np.float64))
        cand = (p * p)[:, None] + offsets[None, :]
        mask = prime_mask_u64(cand.ravel()).reshape(cand.shape)
        hits = mask.sum(axis=1).astype(np.float64)
        parts.append(float(np.dot(lp * lp, hits)))
        if progress is not None:
            progress(min(start + chunk, primes.size), primes.size)
    total = math.fsum(parts)
    return total / (2.0 * x * N)


def write_cache(table: PairCountTable, path, header_comment: str = "") -> None:
    """Persist a PairCountTable as `x,two_r,count` CSV rows."""
    with open(path, "w", newline="") as fh:
        if header_comment:
            for line in header_comment.splitlines():
                fh.write(f"# {line}\n")
        writer = csv.writer(fh)
        writer.writerow(["x", "two_r", "count"])
        for j, x in enumerate(table.checkpoints):
            for r in range(1, table.max_half_gap + 1):
                writer.writerow([x, 2 * r, int(table.counts[r, j])])


def read_cache(path) -> PairCountTable:
    """Load a PairCountTable written by write_cache."""
    rows = []
    with open(path, newline="") as fh:
        for raw in fh:
            if raw.startswith("#"):
                continue
            rows.append(raw.strip())
    reader = csv.reader(rows)
    header = next(reader, None)
    if header != ["x", "two_r", "count"]:
        raise ValueError(f"{path}: not a pair-count cache file (header {header})")
    data: dict = {}
    gaps = set()
    for x_s, two_r_s, count_s in reader:
        x, two_r, count = int(x_s), int(two_r_s), int(count_s)
        if two_r % 2 != 0 or two_r < 2:
            raise ValueError(f"{path}: bad gap {two_r}")
        data[(x, two_r // 2)] = count
        gaps.add(two_r // 2)
    if not data:
        raise ValueError(f"{path}: cache file has no rows")
    cps = sorted({x for x, _ in data})
    N = max(gaps)
    counts = np.zeros((N + 1, len(cps)), dtype=np.int64)
    for (x, r), c in data.items():
        counts[r, cps.index(x)] = c
    return PairCountTable(checkpoints=tuple(cps), max_half_gap=N, counts=counts)
