"""Exact distributions for tiny objects, worked end to end.

A random mapping f: {1..n} -> {1..n} has a functional graph whose connected
components each contain exactly one cycle; a permutation is the special case
where every point lies on a cycle.  This demo builds the exact (big-integer /
rational) distribution of the size of the r-th largest and r-th smallest
component for n = 4 and prints everything there is to know about it.
"""

from fractions import Fraction

from permap import (
    INFINITY,
    ObjectKind,
    Side,
    connected_count,
    largest_poly,
    pmf,
    smallest_poly,
    summarize,
    total_count,
)

P, M = ObjectKind.PERMUTATION, ObjectKind.MAPPING
L, S = Side.LARGEST, Side.SMALLEST

n, r = 4, 2

print("connected objects on j nodes (the recursion's only input):")
for kind in (P, M):
    counts = [connected_count(kind, j) for j in range(1, 6)]
    print(f"  {kind.value:12s} {counts}")
print()

for kind in (P, M):
    total = total_count(kind, n)
    print(f"=== {kind.value}s on n={n} nodes ({total} objects) ===")

    # the rank-window recursion finishes in a polynomial whose x^k (or y^k)
    # coefficient counts objects with r-th largest/smallest component size k
    big = largest_poly(kind, n, (0,) * r)
    small = smallest_poly(kind, n, (INFINITY,) * r)
    print(f"  2nd-largest  counting polynomial:  {big.coeffs}")
    print(f"  2nd-smallest counting polynomial:  {small.coeffs}")

    for side, label in ((L, "2nd largest"), (S, "2nd smallest")):
        dist = pmf(kind, n, r, side)
        pretty = ", ".join(f"P(K={k}) = {p}" for k, p in enumerate(dist.probs) if p)
        stats = summarize(dist)
        print(f"  {label}: {pretty}")
        print(
            f"    mean = {stats.mean} = {float(stats.mean):.6f},"
            f" variance = {stats.variance},"
            f" median = {stats.median}, mode = {stats.mode}"
        )
    print()

print("note: for the smallest side, k = 0 records objects with fewer than r")
print("components (the r-th smallest is undefined there, conventionally 0).")
one_cycle = Fraction(connected_count(P, n), total_count(P, n))
print(f"for permutations that slot holds P(fewer than 2 cycles) = {one_cycle}.")
