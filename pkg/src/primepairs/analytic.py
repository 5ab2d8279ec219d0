"""Analytic comparison functions: li, li2, Chebyshev psi, and the
oscillation term T(x) computed two independent ways.

T(x) collapses the zero sum sum_rho x^{rho-1/2}/rho under the assumption
that all complex zeros lie on the critical line.  It can be evaluated
either from a table of zero ordinates or, exactly, from psi(x) via

    T(x) = x^{-1/2} * (x - psi(x) - log 2pi - (1/2) log(1 - x^{-2})).

Both routes are kept; their agreement is one of the package's main checks.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import sieve
from .sieve import SieveConfig
from .zeros import ZeroTable

#: li(2), the offset between the principal-value logarithmic integral and
#: the integral from 2.  Standard constant, verified against quadrature.
LI_OF_2 = 1.0451637801174927848

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


@dataclass(frozen=True)
class QuadratureResult:
    """Integral value with an a-posteriori error estimate.

    est_error is the difference between the returned value and a coarser
    panel subdivision, a reliable bound at the smoothness of these
    integrands.
    """

    value: float
    est_error: float
    panels: int

    def __float__(self) -> float:
        return self.value


def _integrate_exp_over(x: float, power: int, panel_width: float) -> tuple:
    """Composite 16-point Gauss-Legendre for int_2^x dt/log^power t.

    Substituting t = e^u makes the integrand e^u / u^power, smooth and
    slowly varying on [log 2, log x], where uniform panels converge fast.
    """
    a, b = math.log(2.0), math.log(x)
    panels = max(1, math.ceil((b - a) / panel_width))
    edges = np.linspace(a, b, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    u = mid[:, None] + half[:, None] * _GL_NODES[None, :]
    vals = np.exp(u) / u**power * _GL_WEIGHTS[None, :] * half[:, None]
    return float(np.sum(vals)), panels


def _pair_integral(x: float, power: int) -> QuadratureResult:
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    if x == 2:
        return QuadratureResult(value=0.0, est_error=0.0, panels=0)
    coarse, _ = _integrate_exp_over(x, power, panel_width=0.5)
    fine, panels = _integrate_exp_over(x, power, panel_width=0.25)
    return QuadratureResult(value=fine, est_error=abs(fine - coarse), panels=panels)


def li2(x: float) -> QuadratureResult:
    """int_2^x dt / log^2 t, the pair-counting comparison integral."""
    return _pair_integral(float(x), power=2)


def li(x: float) -> QuadratureResult:
    """Logarithmic integral li(x) = PV int_0^x dt/log t.

    Implemented as li(2) + int_2^x dt/log t; the principal-value offset is
    the standard constant LI_OF_2.
    """
    res = _pair_integral(float(x), power=1)
    return QuadratureResult(value=LI_OF_2 + res.value, est_error=res.est_error, panels=res.panels)


@dataclass(frozen=True)
class PsiValue:
    """Chebyshev psi(x) = sum of Lambda(n) for n <= x."""

    x: int
    value: float


def _floor_kth_root(x: int, k: int) -> int:
    """Exact floor(x**(1/k)) by integer arithmetic."""
    if k == 1:
        return x
    r = int(round(x ** (1.0 / k)))
    while r > 1 and r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def _theta_sum(y: int, config: SieveConfig | None) -> list:
    """Per-segment partial sums of log p over p <= y."""
    parts = []
    for seg in sieve.primes_up_to(y, config):
        primes = seg.primes()
        if primes.size:
            parts.append(float(np.sum(np.log(primes.astype(np.float64)))))
    return parts


def chebyshev_psi(x: int, config: SieveConfig | None = None) -> PsiValue:
    """psi(x) from exact prime powers: sum over k >= 1 of theta(floor(x^{1/k})).

    Power boundaries come from exact integer k-th roots, never from
    floating-point logarithms, so no prime power is dropped or double
    counted at the boundaries.  Partial sums merge through math.fsum.
    """
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if x < 2:
        return PsiValue(x=x, value=0.0)
    parts = []
    k = 1
    while True:
        y = _floor_kth_root(x, k)
        if y < 2:
            break
        parts.extend(_theta_sum(y, config if k == 1 else None))
        k += 1
    return PsiValue(x=x, value=math.fsum(parts))


def _is_prime_power(x: int) -> bool:
    for k in range(1, x.bit_length()):
        root = _floor_kth_root(x, k)
        if root**k == x and sieve.is_prime_u64(root):
            return True
    return False


def t_via_psi(x: int, psi: PsiValue | None = None, config: SieveConfig | None = None) -> float:
    """T(x) from psi(x); exact whenever psi is continuous at x.

    At a prime power the underlying identity holds only for the midpoint
    value of psi, so a warning is emitted there.
    """
    if x <= 1:
        raise ValueError(f"x must be > 1, got {x}")
    if _is_prime_power(x):
        warnings.warn(
            f"x={x} is a prime power; psi jumps there and T(x) is off by "
            "half the jump",
            stacklevel=2,
        )
    if psi is None:
        psi = chebyshev_psi(x, config)
    xf = float(x)
    inner = xf - psi.value - math.log(2.0 * math.pi) - 0.5 * math.log1p(-1.0 / (xf * xf))
    return inner / math.sqrt(xf)


def t_via_zeros(x: float, zeros: ZeroTable) -> float:
    """T(x) truncated to the loaded zero ordinates.

    Terms are generated in ascending ordinate order and combined with
    exact compensated summation, so the result is reproducible bit for
    bit for a given table.
    """
    if x <= 1:
        raise ValueError(f"x must be > 1, got {x}")
    gam = zeros.ordinates
    if gam.size == 0:
        raise ValueError("zero table is empty")
    logx = math.log(float(x))
    terms = (np.cos(gam * logx) + 2.0 * gam * np.sin(gam * logx)) / (gam * gam + 0.25)
    return math.fsum(terms.tolist())


def delta_bar(N: int, x: float) -> float:
    """Predicted deviation model -2N log^2 x / (8 sqrt(x) log^2 2N).

    Meaningful in the regime x ~ N^2; tends to 0 from below as x grows
    with N fixed.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if x <= 1:
        raise ValueError(f"x must be > 1, got {x}")
    logx = math.log(float(x))
    log2n = math.log(2.0 * N)
    return -(2.0 * N * logx * logx) / (8.0 * math.sqrt(float(x)) * log2n * log2n)
