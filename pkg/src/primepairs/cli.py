"""Command-line interface: counting runs, constants, oscillation term,
error-function tables, figure data, and the built-in verification suite.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 data error.
Results go to stdout or files; progress and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__, analysis, analytic, hlconstants, paircount, refdata, sieve
from . import zeros as zeros_mod

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_DATA = 3

#: Checkpoints above this need the --big flag (documented multi-hour runs).
BIG_THRESHOLD = 10**9

CACHE_ENV_VAR = "PRIMEPAIR_CACHE"


class UsageError(Exception):
    """Bad flag combination or value; maps to exit code 2."""


class DataError(Exception):
    """Missing or malformed input data; maps to exit code 3."""


def _parse_x(text: str) -> int:
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"cannot parse x value {text!r}") from None
    if value != int(value) or value < 2:
        raise UsageError(f"x must be an integer >= 2, got {text!r}")
    return int(value)


def _parse_x_list(text: str) -> list:
    xs = [_parse_x(part) for part in text.split(",") if part.strip()]
    if not xs:
        raise UsageError("empty x list")
    if sorted(set(xs)) != xs:
        raise UsageError(f"x list must be strictly ascending: {text!r}")
    return xs


def _parse_n_list(text: str) -> list:
    """N values, either comma separated or start:stop:step (inclusive)."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError(f"range syntax is start:stop:step, got {text!r}")
        try:
            start, stop, step = (int(p) for p in parts)
        except ValueError:
            raise UsageError(f"range syntax is start:stop:step, got {text!r}") from None
        if step <= 0 or start < 1 or stop < start:
            raise UsageError(f"bad N range: {text!r}")
        return list(range(start, stop + 1, step))
    try:
        ns = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"cannot parse N list {text!r}") from None
    if not ns or any(n < 1 for n in ns):
        raise UsageError(f"bad N list: {text!r}")
    if sorted(set(ns)) != ns:
        raise UsageError(f"N list must be strictly ascending: {text!r}")
    return ns


def _require_desk_scale(xs, big: bool) -> None:
    over = [x for x in xs if x > BIG_THRESHOLD]
    if over and not big:
        raise UsageError(
            f"checkpoints {over} exceed {BIG_THRESHOLD}; pass --big to accept "
            "a multi-hour run"
        )


def _cache_dir(flag_value) -> Path:
    if flag_value:
        return Path(flag_value)
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "primepairs"


def _zeros_path(flag_value) -> Path:
    if flag_value:
        return Path(flag_value)
    return zeros_mod.default_zeros_path()


def _config_hash(*parts) -> str:
    digest = hashlib.sha256("|".join(str(p) for p in parts).encode()).hexdigest()
    return digest[:12]


def _header(config_hash: str, **fields) -> str:
    extra = " ".join(f"{k}={v}" for k, v in fields.items())
    return f"primepairs {__version__} config={config_hash} {extra}".strip()


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


class _Progress:
    """Rate-limited progress lines on stderr for long runs."""

    def __init__(self, label: str, interval: float = 2.0):
        self.label = label
        self.interval = interval
        self.started = time.monotonic()
        self.last = self.started

    def __call__(self, done: int, total: int) -> None:
        now = time.monotonic()
        if now - self.last >= self.interval and total:
            self.last = now
            pct = 100.0 * done / total
            _log(f"[{self.label}] {pct:5.1f}% ({done}/{total}, {now - self.started:.0f}s)")


def _get_counts(checkpoints, N, cache_dir: Path, config=None, use_cache=True):
    """Pair counts for (checkpoints, N), reusing the on-disk cache on a hit."""
    key = _config_hash("count", ",".join(str(x) for x in checkpoints), N)
    path = cache_dir / f"pairs-{key}.csv"
    if use_cache and path.exists():
        table = paircount.read_cache(path)
        if table.checkpoints == tuple(checkpoints) and table.max_half_gap == N:
            _log(f"# cache hit: {path}")
            return table, key, True
        _log(f"# cache mismatch, recomputing: {path}")
    table = paircount.count_pairs(
        checkpoints, N, config=config, progress=_Progress("count")
    )
    if use_cache:
        cache_dir.mkdir(parents=True, exist_ok=True)
        header = _header(key, command="count",
                         x_list=",".join(str(x) for x in checkpoints), max_gap=2 * N)
        paircount.write_cache(table, path, header_comment=header)
        _log(f"# cache write: {path}")
    return table, key, False


def cmd_count(args) -> int:
    xs = _parse_x_list(args.x_list)
    if args.max_gap < 2 or args.max_gap % 2 != 0:
        raise UsageError(f"--max-gap must be a positive even number, got {args.max_gap}")
    _require_desk_scale(xs, args.big)
    N = args.max_gap // 2
    sieve.reset_counters()
    config = None
    if args.segment_size or args.workers != 1:
        config = sieve.SieveConfig(
            limit=xs[-1] + args.max_gap,
            segment_size=args.segment_size or sieve.DEFAULT_SEGMENT_SIZE,
            worker_count=args.workers,
        )
    cache = _cache_dir(args.cache)
    table, key, _hit = _get_counts(xs, N, cache, config=config)
    _log(f"# segments sieved: {sieve.counters()['segments_sieved']}")

    if args.dump_primes:
        if xs[-1] > 10**7:
            raise UsageError("--dump-primes is capped at limit <= 1e7")
        with open(args.dump_primes, "w") as fh:
            fh.write(f"# {_header(key, command='dump-primes', limit=xs[-1])}\n")
            fh.write("p\n")
            for seg in sieve.primes_up_to(xs[-1]):
                for p in seg.primes():
                    fh.write(f"{p}\n")
        _log(f"# primes dumped to {args.dump_primes}")

    out = open(args.out, "w") if args.out else sys.stdout
    try:
        header = _header(key, command="count",
                         x_list=",".join(str(x) for x in xs), max_gap=2 * N)
        out.write(f"# {header}\n")
        out.write("x,two_r,count\n")
        for j, x in enumerate(table.checkpoints):
            for r in range(1, table.max_half_gap + 1):
                out.write(f"{x},{2 * r},{int(table.counts[r, j])}\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def cmd_constants(args) -> int:
    if args.max_gap < 2 or args.max_gap % 2 != 0:
        raise UsageError(f"--max-gap must be a positive even number, got {args.max_gap}")
    N = args.max_gap // 2
    sums = hlconstants.prefix_sums(N)
    key = _config_hash("constants", N)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        out.write(f"# {_header(key, command='constants', max_gap=args.max_gap)}\n")
        out.write("two_r,ratio_num,ratio_den,s_over_c2\n")
        for r in range(1, N + 1):
            ratio = hlconstants.ratio(r)
            out.write(
                f"{2 * r},{ratio.numerator},{ratio.denominator},"
                f"{sums.s_over_c2[r]:.7f}\n"
            )
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def _load_zeros_or_fail(path: Path, max_count=None):
    if not path.exists():
        raise DataError(f"zeros file not found: {path}")
    try:
        return zeros_mod.load_zeros(path, max_count=max_count)
    except zeros_mod.ZeroTableError as exc:
        raise DataError(str(exc)) from exc


def cmd_tx(args) -> int:
    x = _parse_x(args.x)
    _require_desk_scale([x], args.big)
    if args.method == "psi":
        value = analytic.t_via_psi(x)
    else:
        table = _load_zeros_or_fail(_zeros_path(args.zeros_file), args.max_zeros)
        _log(f"# zeros loaded: {len(table)} from {table.source}")
        value = analytic.t_via_zeros(x, table)
    print(f"{value:.5f}")
    return EXIT_OK


def cmd_table(args) -> int:
    x = _parse_x(args.x)
    _require_desk_scale([x], args.big)
    n_list = _parse_n_list(args.n_list)
    N_max = max(n_list)
    zeros_table = None
    if args.t_method == "zeros":
        zeros_table = _load_zeros_or_fail(_zeros_path(args.zeros_file))
    cache = _cache_dir(args.cache)
    counts, key, _hit = _get_counts([x], N_max, cache)
    consts = hlconstants.hl_constants(N_max)
    rows = analysis.build_table(x, n_list, counts, consts,
                                t_method=args.t_method, zeros=zeros_table)
    header = _header(_config_hash("table", x, args.n_list, args.t_method),
                     command="table", x=x, t_method=args.t_method)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        analysis.write_table_csv(rows, out, header_comment=header)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def cmd_figure(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    cache = _cache_dir(args.cache)
    zeros_table = None
    if args.t_method == "zeros":
        zeros_table = _load_zeros_or_fail(_zeros_path(args.zeros_file))

    if args.kind == "fixed-x":
        if not args.x:
            raise UsageError("--kind fixed-x needs --x")
        x = _parse_x(args.x)
        _require_desk_scale([x], args.big)
        spec = analysis.FigureSpec(kind="fixed_x", x=x, t_method=args.t_method)
        N_max = max(spec.two_n_grid) // 2
        counts, _key, _hit = _get_counts([x], N_max, cache)
        consts = hlconstants.hl_constants(N_max)
        series = analysis.figure_series(spec, counts, consts, zeros=zeros_table)
        stem = f"figure_fixed-x_{x}"
    else:
        if not args.n:
            raise UsageError("--kind fixed-n needs --n (the gap 2N)")
        two_n = int(args.n)
        if two_n < 2 or two_n % 2 != 0:
            raise UsageError(f"--n must be a positive even gap, got {args.n}")
        x_max = _parse_x(args.x_max)
        _require_desk_scale([x_max], args.big)
        grid = analysis.default_x_grid(x_max)
        if not grid:
            raise UsageError(f"--x-max {args.x_max} leaves an empty checkpoint grid")
        spec = analysis.FigureSpec(kind="fixed_n", two_n=two_n, x_grid=grid,
                                   t_method=args.t_method)
        counts, _key, _hit = _get_counts(list(grid), two_n // 2, cache)
        consts = hlconstants.hl_constants(two_n // 2)
        series = analysis.figure_series(spec, counts, consts, zeros=zeros_table)
        stem = f"figure_fixed-n_{two_n}"

    key = _config_hash("figure", args.kind, args.x or args.n, args.t_method)
    csv_path = out_dir / f"{stem}.csv"
    with open(csv_path, "w") as fh:
        analysis.write_figure_csv(series, fh,
                                  header_comment=_header(key, command="figure", kind=args.kind))
    gp_path = out_dir / f"{stem}.gp"
    with open(gp_path, "w") as fh:
        fh.write(f"# {_header(key, command='figure', kind=args.kind)}\n")
        fh.write(analysis.gnuplot_script(series, csv_path.name))
    print(csv_path)
    print(gp_path)
    return EXIT_OK


def _check(name: str, ok: bool, detail: str, failures: list) -> None:
    mark = "PASS" if ok else "FAIL"
    print(f"{mark} {name}: {detail}")
    if not ok:
        failures.append(name)


def cmd_verify(args) -> int:
    xs = _parse_x_list(args.x_list)
    _require_desk_scale(xs, args.big)
    unknown = [x for x in xs if x not in refdata.DESK_CHECKPOINTS]
    if unknown:
        raise UsageError(
            f"verify has reference data only for x in {refdata.DESK_CHECKPOINTS}, got {unknown}"
        )
    failures: list = []
    cache = _cache_dir(args.cache)
    N = 2500
    counts, _key, _hit = _get_counts(xs, N, cache)
    consts = hlconstants.hl_constants(N)

    for two_r, per_x in sorted(refdata.PAIR_COUNTS.items()):
        for x in xs:
            got = counts.count(two_r // 2, x)
            want = per_x[x]
            _check(f"pair-count 2r={two_r} x={x}", got == want,
                   f"got {got}, want {want}", failures)

    for two_r, (num, den) in sorted(refdata.RATIOS.items()):
        ratio = hlconstants.ratio(two_r // 2)
        ok = (ratio.numerator, ratio.denominator) == (num, den)
        _check(f"ratio 2r={two_r}", ok,
               f"got {ratio.numerator}/{ratio.denominator}, want {num}/{den}", failures)

    c2 = consts.c2
    err = abs(c2.value - refdata.C2_VALUE)
    _check("twin-prime constant", err <= max(c2.tail_bound, 5e-10),
           f"got {c2.value:.10f}, want {refdata.C2_VALUE} (err {err:.2e})", failures)

    for two_n, want in sorted(refdata.S_OVER_C2.items()):
        got = consts.s_over_c2(two_n // 2)
        _check(f"S_N/C2 2N={two_n}", abs(got - want) <= 1e-6,
               f"got {got:.7f}, want {want:.7f}", failures)

    for x, want in sorted(refdata.LI2_VALUES.items()):
        got = analytic.li2(x).value
        tol = 5 * 10.0 ** (-(len(str(want).split(".")[1])))
        _check(f"li2({x})", abs(got - want) <= tol,
               f"got {got:.5f}, want {want} (tol {tol:g})", failures)

    for x in xs:
        if x in refdata.L2_VALUES:
            got = 2.0 * consts.c2.value * analytic.li2(x).value
            want = refdata.L2_VALUES[x]
            _check(f"L2({x})", abs(got - want) <= 1e-2,
                   f"got {got:.4f}, want {want}", failures)

    t_by_x = {}
    for x in xs:
        if x in refdata.T_VALUES:
            got = analytic.t_via_psi(x)
            t_by_x[x] = got
            want = refdata.T_VALUES[x]
            _check(f"T({x}) via psi", abs(got - want) <= 2e-5,
                   f"got {got:.5f}, want {want}", failures)

    for x in xs:
        if x not in refdata.DELTA_N:
            continue
        n_list = sorted(two_n // 2 for two_n in refdata.DELTA_N[x])
        rows = analysis.build_table(x, n_list, counts, consts, t_method="psi")
        for row in rows:
            want_pi = refdata.PI_N[x][row.two_n]
            _check(f"Pi_N 2N={row.two_n} x={x}", row.pi_n == want_pi,
                   f"got {row.pi_n}, want {want_pi}", failures)
            want_delta = refdata.DELTA_N[x][row.two_n]
            _check(f"delta_N 2N={row.two_n} x={x}", abs(row.delta_n - want_delta) <= 1e-4,
                   f"got {row.delta_n:+.5f}, want {want_delta:+.5f}", failures)

    if failures:
        _log(f"# verification failed for {len(failures)} checks")
        return EXIT_VERIFY_FAIL
    _log("# all checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primepairs",
        description="Prime-pair counting, singular-series constants, and the "
                    "zeta-zero oscillation term.",
    )
    parser.add_argument("--version", action="version", version=f"primepairs {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, zeros=False):
        p.add_argument("--cache", help=f"cache directory (default ${CACHE_ENV_VAR} or ~/.cache/primepairs)")
        p.add_argument("--big", action="store_true",
                       help=f"allow checkpoints above {BIG_THRESHOLD} (multi-hour runs)")
        if zeros:
            p.add_argument("--zeros-file",
                           help=f"zero-ordinate table (default ${zeros_mod.ZEROS_ENV_VAR} "
                                "or the vendored 1e5-zero fixture)")

    p = sub.add_parser("count", help="count prime pairs for all gaps up to --max-gap")
    p.add_argument("--x-list", required=True, help="comma-separated checkpoints, e.g. 1e3,1e6")
    p.add_argument("--max-gap", type=int, default=5000, help="largest gap 2N (default 5000)")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--segment-size", type=int, help="sieve segment size in integers")
    p.add_argument("--workers", type=int, default=1, help="worker threads (default 1)")
    p.add_argument("--dump-primes", help="also dump the primes CSV (limit <= 1e7)")
    add_common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("constants", help="singular-series ratios and prefix sums as CSV")
    p.add_argument("--max-gap", type=int, default=5000, help="largest gap 2N (default 5000)")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("tx", help="oscillation term T(x)")
    p.add_argument("--x", required=True)
    p.add_argument("--method", choices=("psi", "zeros"), default="psi")
    p.add_argument("--max-zeros", type=int, help="truncate the zero table")
    add_common(p, zeros=True)
    p.set_defaults(func=cmd_tx)

    p = sub.add_parser("table", help="error-function table at one checkpoint")
    p.add_argument("--x", required=True)
    p.add_argument("--n-list", default="50:2500:50",
                   help="N values, comma list or start:stop:step (default 50:2500:50)")
    p.add_argument("--t-method", choices=("psi", "zeros"), default="psi")
    p.add_argument("--out", help="write CSV here instead of stdout")
    add_common(p, zeros=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("figure", help="figure data CSV plus a gnuplot script")
    p.add_argument("--kind", choices=("fixed-x", "fixed-n"), required=True)
    p.add_argument("--x", help="checkpoint for --kind fixed-x")
    p.add_argument("--n", type=int, help="gap 2N for --kind fixed-n")
    p.add_argument("--x-max", default="1e8",
                   help="largest checkpoint of the fixed-n grid (default 1e8)")
    p.add_argument("--t-method", choices=("psi", "zeros"), default="psi")
    p.add_argument("--out-dir", default=".", help="output directory (default .)")
    add_common(p, zeros=True)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="reproduce the published reference values and report pass/fail")
    p.add_argument("--x", dest="x_list", default="1e6",
                   help="comma-separated checkpoints to verify (default 1e6)")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        _log(f"error: {exc}")
        return EXIT_USAGE
    except DataError as exc:
        _log(f"data error: {exc}")
        return EXIT_DATA
    except (OSError, ValueError) as exc:
        _log(f"data error: {exc}")
        return EXIT_DATA


def console() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console()
