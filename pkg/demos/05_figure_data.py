"""
Figure data: Delta_N against the gap cutoff, with the deviation model
=====================================================================

Writes the CSV + gnuplot script pair for one fixed-checkpoint figure
into ./out; plot with `gnuplot out/figure_fixed-x_1000000.gp`.
"""

from pathlib import Path

from primepairs import FigureSpec, count_pairs, figure_series, hl_constants
from primepairs.analysis import gnuplot_script, write_figure_csv

out = Path("out")
out.mkdir(exist_ok=True)

x = 10**6
spec = FigureSpec(kind="fixed_x", x=x, two_n_grid=tuple(range(50, 5001, 50)))

print("counting pairs for 100 grid points (a few seconds) ...")
counts = count_pairs([x], max(spec.two_n_grid) // 2)
consts = hl_constants(max(spec.two_n_grid) // 2)
series = figure_series(spec, counts, consts)

csv_path = out / f"figure_fixed-x_{x}.csv"
with open(csv_path, "w") as fh:
    write_figure_csv(series, fh)
gp_path = out / f"figure_fixed-x_{x}.gp"
gp_path.write_text(gnuplot_script(series, csv_path.name))

print(f"wrote {csv_path}")
print(f"wrote {gp_path}")

lo = min(p[1] for p in series.points)
hi = max(p[1] for p in series.points)
print(f"Delta_N range over the grid: [{lo:+.4f}, {hi:+.4f}]")
