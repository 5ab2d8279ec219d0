"""Assembly of the averaged pair-count comparison.

For each half-gap r the remainder is omega_{2r}(x) = pi_{2r}(x) -
2 C_{2r} li2(x).  Averaging over r <= N and normalising gives

    Q_N(x) = (Pi_N(x) - (S_N/C2) L2(x)) / (N li2(sqrt x)),  L2 = 2 C2 li2,

and the error function Delta_N(x) = Q_N(x) + T(x) + 1, which should be
small and slowly varying if the averaged remainder really is governed by
the single oscillation term T(x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import analytic
from .analytic import QuadratureResult
from .hlconstants import HLConstants
from .paircount import PairCountTable, aggregate_Pi
from .sieve import prime_count
from .zeros import ZeroTable


@dataclass(frozen=True)
class AnalysisRow:
    """One row of the error-function table at a fixed checkpoint x."""

    two_n: int
    s_over_c2: float
    pi_n: int
    q_n: float
    t_x: float
    delta_n: float
    delta_bar: float
    x: int


@dataclass(frozen=True)
class FigureSeries:
    """Plot-ready series of (abscissa, delta_n, optional delta_bar) points."""

    kind: str  # "fixed_x" or "fixed_n"
    points: tuple
    label: str


@dataclass(frozen=True)
class FigureSpec:
    """Request for one figure's data.

    fixed_x sweeps 2N over two_n_grid at one checkpoint; fixed_n sweeps x
    over x_grid at one 2N.  The deviation model column is attached to
    fixed_x series at the checkpoints where the model is informative.
    """

    kind: str
    x: int | None = None
    two_n: int | None = None
    two_n_grid: tuple = tuple(range(50, 5001, 50))
    x_grid: tuple = ()
    t_method: str = "psi"
    model_overlay_x: tuple = (10**6, 10**8)


def omega_2r(x: int, r: int, counts: PairCountTable, consts: HLConstants) -> float:
    """Remainder pi_{2r}(x) - 2 C_{2r} li2(x) for one gap."""
    return counts.count(r, x) - 2.0 * consts.c2r(r) * analytic.li2(x).value


def _t_value(x: int, t_method: str, zeros: ZeroTable | None) -> float:
    if t_method == "psi":
        return analytic.t_via_psi(x)
    if t_method == "zeros":
        if zeros is None:
            raise ValueError("t_method='zeros' needs a loaded zero table")
        return analytic.t_via_zeros(x, zeros)
    raise ValueError(f"unknown t_method: {t_method!r}")


def q_n(
    x: int,
    N: int,
    counts: PairCountTable,
    consts: HLConstants,
    li2_x: float | None = None,
    li2_sqrt_x: float | None = None,
) -> float:
    """Normalised averaged remainder Q_N(x)."""
    if li2_x is None:
        li2_x = analytic.li2(x).value
    if li2_sqrt_x is None:
        li2_sqrt_x = analytic.li2(math.sqrt(x)).value
    pi_n = aggregate_Pi(counts, N, x)
    l2 = 2.0 * consts.c2.value * li2_x
    return (pi_n - consts.s_over_c2(N) * l2) / (N * li2_sqrt_x)


def delta_n(
    x: int,
    N: int,
    counts: PairCountTable,
    consts: HLConstants,
    t_method: str = "psi",
    zeros: ZeroTable | None = None,
    t_x: float | None = None,
    li2_x: float | None = None,
    li2_sqrt_x: float | None = None,
) -> AnalysisRow:
    """Error function Delta_N(x) = Q_N(x) + T(x) + 1 with all intermediates."""
    if t_x is None:
        t_x = _t_value(x, t_method, zeros)
    q = q_n(x, N, counts, consts, li2_x=li2_x, li2_sqrt_x=li2_sqrt_x)
    return AnalysisRow(
        two_n=2 * N,
        s_over_c2=consts.s_over_c2(N),
        pi_n=aggregate_Pi(counts, N, x),
        q_n=q,
        t_x=t_x,
        delta_n=q + t_x + 1.0,
        delta_bar=analytic.delta_bar(N, x),
        x=x,
    )


def build_table(
    x: int,
    n_list: Sequence[int],
    counts: PairCountTable,
    consts: HLConstants,
    t_method: str = "psi",
    zeros: ZeroTable | None = None,
) -> list:
    """Rows of the error-function table for each N in n_list, in order."""
    rows = []
    if not n_list:
        return rows
    t_x = _t_value(x, t_method, zeros)
    li2_x = analytic.li2(x).value
    li2_sqrt_x = analytic.li2(math.sqrt(x)).value
    for N in n_list:
        rows.append(
            delta_n(
                x, N, counts, consts,
                t_method=t_method, zeros=zeros,
                t_x=t_x, li2_x=li2_x, li2_sqrt_x=li2_sqrt_x,
            )
        )
    return rows


def riemann_ratio(x: int) -> float:
    """Normalised prime-count remainder 2 (pi(x) - li(x)) / li(sqrt x).

    Comparable against -(T(x) + 1) up to a O(1/log x) drift; the agreement
    is a sanity check that T(x) carries the remainder's main oscillation.
    """
    if x < 10:
        raise ValueError(f"x must be >= 10, got {x}")
    pi_x = prime_count(x)
    return 2.0 * (pi_x - analytic.li(x).value) / analytic.li(math.sqrt(x)).value


def figure_series(
    spec: FigureSpec,
    counts: PairCountTable,
    consts: HLConstants,
    zeros: ZeroTable | None = None,
) -> FigureSeries:
    """Data series behind the two figure families.

    fixed_x: Delta_N(x) against 2N, with the deviation model attached when
    x is in spec.model_overlay_x.  fixed_n: Delta_N(x) against x over the
    requested checkpoint grid.
    """
    if spec.kind == "fixed_x":
        if spec.x is None:
            raise ValueError("fixed_x figure needs x")
        grid = [v for v in spec.two_n_grid if v % 2 == 0 and v >= 2]
        if list(grid) != sorted(set(grid)):
            raise ValueError("two_n_grid must be strictly ascending")
        rows = build_table(spec.x, [v // 2 for v in grid], counts, consts,
                           t_method=spec.t_method, zeros=zeros)
        with_model = spec.x in spec.model_overlay_x
        pts = tuple(
            (row.two_n, row.delta_n, row.delta_bar if with_model else None)
            for row in rows
        )
        return FigureSeries(kind="fixed_x", points=pts, label=f"x={spec.x}")
    if spec.kind == "fixed_n":
        if spec.two_n is None:
            raise ValueError("fixed_n figure needs two_n")
        grid = sorted(set(int(v) for v in spec.x_grid))
        if not grid:
            raise ValueError("fixed_n figure needs a checkpoint grid")
        if any(v not in counts.checkpoints for v in grid):
            missing = [v for v in grid if v not in counts.checkpoints]
            raise ValueError(f"counts table lacks checkpoints {missing}")
        N = spec.two_n // 2
        pts = []
        for x in grid:
            row = delta_n(x, N, counts, consts, t_method=spec.t_method, zeros=zeros)
            pts.append((x, row.delta_n, None))
        return FigureSeries(kind="fixed_n", points=tuple(pts), label=f"2N={spec.two_n}")
    raise ValueError(f"unknown figure kind: {spec.kind!r}")


def default_x_grid(x_max: int) -> tuple:
    """Checkpoint grid {10^6} plus {i * 10^j} capped at x_max."""
    grid = set()
    j = 6
    while 10**j <= x_max:
        for i in range(1, 11):
            v = i * 10**j
            if v <= x_max:
                grid.add(v)
        j += 1
    grid.add(10**6)
    return tuple(sorted(v for v in grid if v <= x_max))


def write_table_csv(rows: Iterable[AnalysisRow], fh, header_comment: str = "") -> None:
    """Emit table rows as CSV; reals carry the published precision."""
    if header_comment:
        for line in header_comment.splitlines():
            fh.write(f"# {line}\n")
    fh.write("two_n,s_over_c2,pi_n,q_n,t_x,delta_n,delta_bar,x\n")
    for row in rows:
        fh.write(
            f"{row.two_n},{row.s_over_c2:.7f},{row.pi_n},{row.q_n:.5f},"
            f"{row.t_x:.5f},{row.delta_n:.5f},{row.delta_bar:.5f},{row.x}\n"
        )


def write_figure_csv(series: FigureSeries, fh, header_comment: str = "") -> None:
    """Emit a figure series as CSV with an optional model column."""
    if header_comment:
        for line in header_comment.splitlines():
            fh.write(f"# {line}\n")
    has_model = any(p[2] is not None for p in series.points)
    abscissa = "two_n" if series.kind == "fixed_x" else "x"
    if has_model:
        fh.write(f"{abscissa},delta_n,delta_bar\n")
    else:
        fh.write(f"{abscissa},delta_n\n")
    for point in series.points:
        if has_model:
            fh.write(f"{point[0]},{point[1]:.5f},{point[2]:.5f}\n")
        else:
            fh.write(f"{point[0]},{point[1]:.5f}\n")


def gnuplot_script(series: FigureSeries, csv_name: str) -> str:
    """Self-contained gnuplot script plotting an emitted figure CSV."""
    has_model = any(p[2] is not None for p in series.points)
    lines = [
        "# gnuplot script, generated alongside the CSV it plots",
        "set datafile separator ','",
        "set datafile commentschars '#'",
        "set key top right",
        "set grid",
        f"set title 'error function, {series.label}'",
        "set ylabel 'delta_N'",
    ]
    if series.kind == "fixed_x":
        lines.append("set xlabel '2N'")
        plot = f"plot '{csv_name}' every ::1 using 1:2 with points pt 7 ps 0.4 title 'delta_N'"
        if has_model:
            plot += f", '{csv_name}' every ::1 using 1:3 with lines lw 2 title 'deviation model'"
    else:
        lines.append("set xlabel 'x'")
        lines.append("set logscale x")
        plot = f"plot '{csv_name}' every ::1 using 1:2 with linespoints pt 7 ps 0.4 title 'delta_N'"
    lines.append(plot)
    lines.append("pause -1 'press enter to close'")
    return "\n".join(lines) + "\n"
