"""Shared fixtures: the expensive desk-scale runs happen once per session.

Oracles here are deliberately independent of the package internals: pure
python trial division for primes, a dict-based von Mangoldt table, and
sympy/mpmath for spot values.
"""

from __future__ import annotations

import math
import time

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from primepairs import (
    chebyshev_psi,
    count_pairs,
    fixture_path,
    hl_constants,
    load_zeros,
    t_via_psi,
)

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

DESK_CHECKPOINTS = (10**3, 10**4, 10**6, 10**8)
DESK_N = 2500


@pytest.fixture(scope="session")
def desk_counts():
    """Full pair-count table at the desk checkpoints, with its wall time."""
    t0 = time.perf_counter()
    table = count_pairs(DESK_CHECKPOINTS, DESK_N)
    elapsed = time.perf_counter() - t0
    return table, elapsed


@pytest.fixture(scope="session")
def consts2500():
    return hl_constants(DESK_N)


@pytest.fixture(scope="session")
def zeros_fixture():
    return load_zeros(fixture_path())


@pytest.fixture(scope="session")
def t_psi_values():
    return {x: t_via_psi(x) for x in (10**6, 10**8)}


@pytest.fixture(scope="session")
def psi_values():
    return {x: chebyshev_psi(x).value for x in (10**6, 10**8)}


def trial_division_primes(limit: int) -> list:
    """Primes <= limit by incremental trial division; the sieve oracle."""
    primes: list = []
    for n in range(2, limit + 1):
        root = math.isqrt(n)
        divisible = False
        for p in primes:
            if p > root:
                break
            if n % p == 0:
                divisible = True
                break
        if not divisible:
            primes.append(n)
    return primes


@pytest.fixture(scope="session")
def trial_primes_1e6():
    return trial_division_primes(10**6)


@pytest.fixture(scope="session")
def primeset_1e5(trial_primes_1e6):
    """Primes up to 1e5 + 300 as a set, for the naive pair-count oracle."""
    cap = 10**5 + 300
    return {p for p in trial_primes_1e6 if p <= cap}


def naive_pair_counts(x: int, r_max: int, primeset: set) -> list:
    """counts[r] = #{p <= x : p and p + 2r prime}; the pair-count oracle."""
    ps = sorted(p for p in primeset if p <= x)
    out = [0] * (r_max + 1)
    for r in range(1, r_max + 1):
        gap = 2 * r
        out[r] = sum(1 for p in ps if p + gap in primeset)
    return out


@pytest.fixture(scope="session")
def lambda_table_1e5(trial_primes_1e6):
    """Von Mangoldt values on [0, 1e5] built from prime powers directly."""
    limit = 10**5
    lam = np.zeros(limit + 1, dtype=np.float64)
    for p in trial_primes_1e6:
        if p > limit:
            break
        q = p
        while q <= limit:
            lam[q] = math.log(p)
            q *= p
    return lam
