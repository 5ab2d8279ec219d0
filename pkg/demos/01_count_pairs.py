"""
Counting prime pairs (p, p+2r) and checking the Hardy-Littlewood prediction
===========================================================================

Every gap up to 100 at one checkpoint, side by side with 2*C_{2r}*li2(x).
"""

import numpy as np

from primepairs import count_pairs, hl_constants, li2

x = 10**6
N = 50

table = count_pairs([x], N)
consts = hl_constants(N, prime_limit=10**6)
li2_x = li2(x).value

print(f"prime pairs up to x={x}, gaps 2r <= {2 * N}")
print(f"{'2r':>4} {'count':>8} {'predicted':>11} {'count/pred':>10}")
for r in range(1, N + 1):
    got = table.count(r, x)
    pred = 2.0 * consts.c2r(r) * li2_x
    print(f"{2 * r:>4} {got:>8} {pred:>11.1f} {got / pred:>10.4f}")

ratios = np.array([table.count(r, x) / (2.0 * consts.c2r(r) * li2_x)
                   for r in range(1, N + 1)])
print(f"\nmean count/prediction over all gaps: {ratios.mean():.5f}")
print(f"spread (std):                        {ratios.std():.5f}")
