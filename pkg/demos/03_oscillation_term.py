"""
The oscillation term T(x): explicit zero sum vs the psi identity
================================================================

T(x) can be computed two independent ways: summing over zeta-zero
ordinates, or from Chebyshev's psi function.  The zero sum converges
slowly (it is only conditionally summable), so watch the truncated sum
approach the psi value as more zeros are included.
"""

from primepairs import ZeroTable, fixture_path, load_zeros, t_via_psi, t_via_zeros

zeros = load_zeros(fixture_path())
print(f"loaded {len(zeros)} zero ordinates from the vendored fixture\n")

for x in (10**6, 10**8):
    exact = t_via_psi(x)
    print(f"x = {x}")
    print(f"  psi route:              T(x) = {exact:+.6f}")
    for count in (100, 1000, 10_000, 100_000):
        part = ZeroTable(ordinates=zeros.ordinates[:count], source="slice")
        approx = t_via_zeros(x, part)
        print(f"  first {count:>6} zeros:     T(x) = {approx:+.6f}   "
              f"(off by {abs(approx - exact):.4f})")
    print()
