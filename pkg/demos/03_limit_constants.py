"""Where the finite-n statistics are heading: the n -> infinity constants.

The normalized mean of the r-th longest cycle converges to a moment constant
expressed through the exponential integral; the normalized median converges
to xi_r, the point where the generalized Dickman function rho_r crosses 1/2;
and the density of the second-longest cycle has an interior mode x_0.  This
demo prints the catalog and then watches the exact finite-n values drift
toward two of the limits.
"""

from permap import (
    ObjectKind,
    Side,
    constants_catalog,
    median_xi,
    mode_x0,
    moment_L,
    pmf_from_tables_float,
    summarize,
)

print("full catalog (value, achieved quadrature error):")
for name, value, error in constants_catalog():
    print(f"  {name:28s} {value:.18f}   +/- {error:.1e}")
print()

print("limiting scaled medians and the second-longest density mode:")
for r in (1, 2, 3, 4):
    print(f"  xi_{r} = {median_xi(r):.18f}")
print(f"  x_0  = {mode_x0():.18f}")
print()

limit_mu = moment_L(1, 2, 1).value
limit_nu = median_xi(2)
print("drift of the second-longest cycle statistics (permutations):")
print(f"  {'n':>6s} {'mean/n':>12s} {'median/n':>12s}")
for n in (250, 500, 1000, 2000):
    stats = summarize(pmf_from_tables_float(2, n, Side.LARGEST))
    print(f"  {n:6d} {stats.normalized_mean:12.8f} {stats.median / n:12.8f}")
print(f"  {'limit':>6s} {limit_mu:12.8f} {limit_nu:12.8f}")
