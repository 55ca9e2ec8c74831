"""Three independent computation routes produce identical integers.

1. rank-window polynomials: march a window of component sizes through the
   object, promoting/demoting as sizes enter and leave the tracked range;
2. cumulative cycle-count recursions (Knuth/Trabb Pardo style): count
   permutations whose r-th longest cycle is <= k (proved) or whose r-th
   shortest is >= k (conjectural for r >= 2, with a correction term);
3. brute force: decompose every single object.

The first two run on exact big integers, so agreement is exact equality,
not a tolerance.  Along the way the correction term of route 2 reveals a
classical surprise: at k = 1 it collapses to an unsigned Stirling cycle
number, Delta_r(1, n) = c(n, r).
"""

from permap import (
    ObjectKind,
    Side,
    delta,
    enumerate_pmf,
    pmf,
    pmf_from_tables,
    stirling_cycle,
)

P = ObjectKind.PERMUTATION

print("route agreement for permutations, r-th longest and shortest cycle:")
for n in (6, 9, 12):
    for r in (1, 2, 3):
        for side in (Side.LARGEST, Side.SMALLEST):
            a = pmf(P, n, r, side).probs
            b = pmf_from_tables(r, n, side).probs
            rows = [a == b]
            tag = "window == cumulative"
            if n <= 7:
                c = enumerate_pmf(P, n, r, side).probs
                rows.append(a == c)
                tag += " == brute force"
            status = "OK" if all(rows) else "MISMATCH"
            print(f"  n={n:2d} r={r} {side.value:9s} {tag}: {status}")
print()

print("the correction term at k=1 is an unsigned Stirling cycle number:")
print(f"  {'n':>3s} {'Delta_2(1,n)':>14s} {'c(n,2)':>14s}   "
      f"{'Delta_3(1,n)':>14s} {'c(n,3)':>14s}")
for n in (5, 8, 12, 16):
    d2, c2 = delta(2, 1, n), stirling_cycle(n, 2)
    d3, c3 = delta(3, 1, n), stirling_cycle(n, 3)
    assert d2 == c2 and d3 == c3
    print(f"  {n:3d} {d2:14d} {c2:14d}   {d3:14d} {c3:14d}")
print()
print("(both columns computed by different recursions; equality is exact.)")
