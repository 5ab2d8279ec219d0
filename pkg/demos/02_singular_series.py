"""
The twin-prime constant and the singular-series ratios
======================================================
"""

from primepairs import fg_deviation, prefix_sums, ratio, twin_prime_constant

# C2 from the truncated product, at increasing cutoffs
for limit in (10**4, 10**5, 10**6, 10**7):
    c2 = twin_prime_constant(limit)
    print(f"C2 over primes <= {limit:>8}: {c2.value:.12f}  "
          f"(tail bound {c2.tail_bound:.1e})")
print("reference                 : 0.660161815800\n")

# the ratio C_{2r}/C2 is an exact rational determined by the odd primes in r
print("gap  C_2r/C2")
for r in (1, 2, 3, 5, 6, 15, 105, 1155):
    q = ratio(r)
    print(f"{2 * r:>5}  {q.numerator}/{q.denominator}")

# prefix sums S_N/C2 grow linearly; the deviation from m - log(m)/2
# stays small, which is what makes the averaged remainder usable
sums = prefix_sums(2500)
print("\n   m   S_m/C2        deviation")
for m in (10, 50, 250, 1000, 2500):
    print(f"{m:>5}  {float(sums.s_over_c2[m]):>12.5f}  {fg_deviation(m, sums):+.5f}")
