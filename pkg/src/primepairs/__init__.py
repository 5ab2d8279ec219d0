"""Prime-pair counting at scale, Hardy-Littlewood constants, and the
zeta-zero oscillation term, with the averaged error function tying them
together.

The public surface mirrors the pipeline: sieve primes, count pairs,
compute the singular-series constants, evaluate the analytic comparison
terms, and assemble the error-function tables and figure series.
"""

__version__ = "0.1.0"

from .analysis import (
    AnalysisRow,
    FigureSeries,
    FigureSpec,
    build_table,
    delta_n,
    figure_series,
    omega_2r,
    q_n,
    riemann_ratio,
)
from .analytic import (
    PsiValue,
    QuadratureResult,
    chebyshev_psi,
    delta_bar,
    li,
    li2,
    t_via_psi,
    t_via_zeros,
)
from .hlconstants import (
    HLConstants,
    HLRatio,
    PrefixSums,
    TwinPrimeConstant,
    fg_deviation,
    hl_constants,
    prefix_sums,
    ratio,
    twin_prime_constant,
)
from .paircount import (
    PairCountTable,
    WeightedPairSums,
    aggregate_Pi,
    count_pairs,
    theta_star_mean,
    weighted_sums,
)
from .sieve import (
    PrimeSegment,
    SieveConfig,
    is_prime_u64,
    prime_count,
    prime_mask_u64,
    primes_array,
    primes_up_to,
)
from .zeros import (
    ZeroTable,
    ZeroTableCorrupt,
    ZeroTableError,
    ZeroTableParseError,
    ZeroTableWrongFile,
    default_zeros_path,
    fixture_path,
    load_zeros,
    write_zeros,
    zero_count_check,
)

__all__ = [
    "__version__",
    "AnalysisRow", "FigureSeries", "FigureSpec", "build_table", "delta_n",
    "figure_series", "omega_2r", "q_n", "riemann_ratio",
    "PsiValue", "QuadratureResult", "chebyshev_psi", "delta_bar", "li",
    "li2", "t_via_psi", "t_via_zeros",
    "HLConstants", "HLRatio", "PrefixSums", "TwinPrimeConstant",
    "fg_deviation", "hl_constants", "prefix_sums", "ratio",
    "twin_prime_constant",
    "PairCountTable", "WeightedPairSums", "aggregate_Pi", "count_pairs",
    "theta_star_mean", "weighted_sums",
    "PrimeSegment", "SieveConfig", "is_prime_u64", "prime_count",
    "prime_mask_u64", "primes_array", "primes_up_to",
    "ZeroTable", "ZeroTableCorrupt", "ZeroTableError", "ZeroTableParseError",
    "ZeroTableWrongFile", "default_zeros_path", "fixture_path", "load_zeros",
    "write_zeros", "zero_count_check",
]
