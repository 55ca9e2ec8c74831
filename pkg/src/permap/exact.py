"""Exact distribution engine: the rank-list polynomial recursion.

Components of a random n-object are generated one at a time, each new
component being the one containing the lowest unused label; a component
of size j can be completed in c_j * C(n-1, j-1) ways when n nodes
remain.  A "rank window" -- a sorted length-r list -- tracks the r
largest (or r smallest) component sizes produced so far.  When nothing
remains, the window's minimum (resp. maximum) entry is the size of the
r-th largest (resp. r-th smallest) component, recorded as the exponent
of a monomial.  Summing over the recursion therefore yields a
polynomial whose k-th coefficient counts objects whose r-th ranked
component has size exactly k.

On the largest side the window starts as r zeros (placeholders below
any real size); on the smallest side it starts as r copies of INFINITY
(placeholders above any real size), and a surviving INFINITY digest
means the object had fewer than r components, reported as size 0.

The float engine runs the same recursion normalised by the total count
t_n.  Tracking whole windows in floating point is hopeless at table
sizes (the window space grows like n^r per level), but for one fixed
threshold k the window projects onto a tiny sufficient statistic: the
number of window entries beyond k.  Inserting j and dropping the
minimum changes the count of >k entries by [j > k], capped at r, no
matter what the window was, so the projection commutes with the window
update (dually for the smallest side, where the pair "components so
far, entries below k" is tracked).  The projected chain is run for
every threshold at once as a numpy table, giving CDF columns whose
differences are the PMF.

All computations are deterministic: summation orders are fixed, and
results do not depend on call order.  Engines keyed by (kind, side)
share module-level memo tables; create none of your own state here.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .kinds import ObjectKind, Side, connected_count, first_component_split, total_count
from .stats import ComponentPMF

INFINITY: float = float("inf")

RankEntry = int | float  # int size or the INFINITY placeholder


class PrecisionError(ArithmeticError):
    """A float run drifted past the acceptable mass-sum tolerance."""


@dataclass(frozen=True)
class RowPolynomial:
    """One row of the recursion: coefficient k counts objects with digest k."""

    coeffs: tuple[int, ...]
    n: int
    side: Side


def promote(ranks: Sequence[RankEntry], j: int) -> tuple[RankEntry, ...]:
    """Insert size j into the window, keep the r largest entries."""
    return tuple(sorted(tuple(ranks) + (j,))[1:])


def demote(ranks: Sequence[RankEntry], j: int) -> tuple[RankEntry, ...]:
    """Insert size j into the window, keep the r smallest entries."""
    return tuple(sorted(tuple(ranks) + (j,))[:-1])


# ---------------------------------------------------------------------------
# exact engine

_MEMO: dict[tuple[ObjectKind, Side], dict] = {}
_PASCAL: dict[int, list[int]] = {}


def _pascal_row(m: int) -> list[int]:
    row = _PASCAL.get(m)
    if row is None:
        row = [1]
        for i in range(m):
            row.append(row[-1] * (m - i) // (i + 1))
        _PASCAL[m] = row
    return row


def _validate_window(ranks, allow_infinite: bool) -> tuple[RankEntry, ...]:
    window = tuple(sorted(ranks))
    if not window:
        raise ValueError("rank window must have at least one entry")
    for entry in window:
        if entry == INFINITY:
            if not allow_infinite:
                raise ValueError("INFINITY entries only make sense on the smallest side")
        elif not isinstance(entry, int) or entry < 0:
            raise ValueError(f"rank window entries must be integers >= 0, got {entry!r}")
    return window


def _row_coeffs(kind: ObjectKind, side: Side, n: int, window) -> tuple[int, ...]:
    memo = _MEMO.setdefault((kind, side), {})
    step = promote if side is Side.LARGEST else demote
    conn = [0] + [connected_count(kind, j) for j in range(1, n + 1)]
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 200))

    def rec(m: int, ranks) -> tuple[int, ...]:
        key = (m, ranks)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if m == 0:
            digest = ranks[0] if side is Side.LARGEST else ranks[-1]
            if digest == INFINITY:  # fewer than r components ever appeared
                digest = 0
            out = (0,) * digest + (1,)
        else:
            acc: list[int] = []
            row = _pascal_row(m - 1)
            for j in range(1, m + 1):
                weight = conn[j] * row[j - 1]
                child = rec(m - j, step(ranks, j))
                if len(child) > len(acc):
                    acc.extend([0] * (len(child) - len(acc)))
                for i, coef in enumerate(child):
                    if coef:
                        acc[i] += weight * coef
            out = tuple(acc)
        memo[key] = out
        return out

    return rec(n, window)


def largest_poly(kind: ObjectKind, n: int, ranks: Sequence[RankEntry]) -> RowPolynomial:
    """Row polynomial for the largest side; the window must be all finite.

    largest_poly(kind, n, (0,)*r) generates the distribution of the r-th
    largest component size over all n-objects of the kind.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    window = _validate_window(ranks, allow_infinite=False)
    return RowPolynomial(_row_coeffs(kind, Side.LARGEST, n, window), n, Side.LARGEST)


def smallest_poly(kind: ObjectKind, n: int, ranks: Sequence[RankEntry]) -> RowPolynomial:
    """Row polynomial for the smallest side; INFINITY entries are placeholders.

    smallest_poly(kind, n, (INFINITY,)*r) generates the distribution of the
    r-th smallest component size, with fewer-than-r-components reported as 0.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    window = _validate_window(ranks, allow_infinite=True)
    return RowPolynomial(_row_coeffs(kind, Side.SMALLEST, n, window), n, Side.SMALLEST)


def support_length(n: int, r: int, side: Side) -> int:
    """Number of possible sizes (0..bound) of the r-th ranked component."""
    if side is Side.LARGEST:
        return n // r + 1  # r components larger than n/r will not fit
    return max(n - r + 2, 1)  # r-th smallest <= n - (r-1) singleton companions


def pmf(kind: ObjectKind, n: int, r: int, side: Side) -> ComponentPMF:
    """Exact distribution of the r-th ranked component size, as Fractions."""
    if n < 1:
        raise ValueError("pmf requires n >= 1")
    if r < 1:
        raise ValueError("pmf requires r >= 1")
    if side is Side.LARGEST:
        coeffs = largest_poly(kind, n, (0,) * r).coeffs
    else:
        coeffs = smallest_poly(kind, n, (INFINITY,) * r).coeffs
    length = support_length(n, r, side)
    if len(coeffs) > length:
        raise AssertionError(f"support bound violated: {len(coeffs)} > {length}")
    den = total_count(kind, n)
    probs = tuple(Fraction(c, den) for c in coeffs) + (Fraction(0),) * (length - len(coeffs))
    return ComponentPMF(kind, n, r, side, probs)


def memo_stats() -> dict[str, int]:
    """Measured memo sizes per (kind, side) engine, for capacity planning."""
    return {f"{kind.value}/{side.value}": len(memo) for (kind, side), memo in _MEMO.items()}


def clear_memo() -> None:
    for memo in _MEMO.values():
        memo.clear()


# ---------------------------------------------------------------------------
# float engine: the threshold-projected chain

_MASS_TOL = 1e-9


class _ThresholdTable:
    """Backward table of the threshold-projected window chain.

    Largest side: level b holds P{an m-object has at most b components of
    size > k}, for b = 0..r-1, thresholds k = 0..n_max//r, sizes m = 0..n_max.
    The CDF of the r-th largest size at n is level r-1, column n.

    Smallest side: level (a, b) holds P{at least a components and fewer
    than b components of size < k}; level (r, r) at k >= 1 is
    P{r-th smallest >= k}, with the fewer-than-r-components digest 0.
    """

    def __init__(self, kind: ObjectKind, side: Side, r: int, n_max: int):
        self.kind, self.side, self.r, self.n_max = kind, side, r, n_max
        # the design point: >= 80-bit significands for deep mapping runs
        self.dtype = np.longdouble if (kind is ObjectKind.MAPPING and n_max > 200) else np.float64
        if side is Side.LARGEST:
            self.k_max = n_max // r
            self._build_largest()
        else:
            self.k_max = max(n_max - r + 2, 1)
            self._build_smallest()

    def _split(self, m: int):
        if self.kind is ObjectKind.PERMUTATION:
            return [1.0 / m] * m
        return first_component_split(self.kind, m)

    def _build_largest(self) -> None:
        r, K, N = self.r, self.k_max, self.n_max
        levels = [np.zeros((K + 1, N + 1), dtype=self.dtype) for _ in range(r)]
        for lev in levels:
            lev[:, 0] = 1.0
        col = np.empty(K + 1, dtype=self.dtype)
        for m in range(1, N + 1):
            split = self._split(m)
            for b in range(r):
                col[:] = 0.0
                own, down = levels[b], (levels[b - 1] if b else None)
                for j in range(1, m + 1):
                    p = split[j - 1]
                    if j <= K:
                        col[j:] += p * own[j:, m - j]  # new component within threshold
                    if down is not None:
                        jj = min(j, K + 1)
                        col[:jj] += p * down[:jj, m - j]  # one more oversized component
                own[:, m] = col
        self.levels = levels

    def _build_smallest(self) -> None:
        r, K, N = self.r, self.k_max, self.n_max
        # reachable (a, b) levels from (r, r); b = 0 is identically zero
        needed = {(r, r)}
        stack = [(r, r)]
        while stack:
            a, b = stack.pop()
            for nxt in ((max(a - 1, 0), b), (max(a - 1, 0), b - 1)):
                if nxt[1] >= 1 and nxt not in needed:
                    needed.add(nxt)
                    stack.append(nxt)
        levels = {ab: np.zeros((K + 1, N + 1), dtype=self.dtype) for ab in needed}
        for (a, b), lev in levels.items():
            if a == 0:  # the empty object satisfies "at least 0, fewer than b >= 1"
                lev[:, 0] = 1.0
        col = np.empty(K + 1, dtype=self.dtype)
        for m in range(1, N + 1):
            split = self._split(m)
            for (a, b), lev in levels.items():
                col[:] = 0.0
                small = levels.get((max(a - 1, 0), b - 1))  # component below threshold
                other = levels[(max(a - 1, 0), b)]
                for j in range(1, m + 1):
                    p = split[j - 1]
                    jj = min(j + 1, K + 1)
                    col[:jj] += p * other[:jj, m - j]
                    if small is not None and jj <= K:
                        col[jj:] += p * small[jj:, m - j]
                lev[:, m] = col
        self.levels = levels

    def pmf_column(self, n: int) -> np.ndarray:
        if n > self.n_max:
            raise ValueError("table built too small")
        r = self.r
        length = support_length(n, r, self.side)
        if self.side is Side.LARGEST:
            cdf = self.levels[r - 1][: length, n]
            if abs(float(cdf[-1]) - 1.0) > _MASS_TOL:
                raise PrecisionError(f"mass-sum check failed: CDF top = {float(cdf[-1])!r}")
            probs = np.diff(cdf, prepend=self.dtype(0.0))
        else:
            tail = self.levels[(r, r)][: length + 1, n]  # tail[k] = P{digest >= k}, k >= 1
            probs = np.empty(length, dtype=self.dtype)
            probs[0] = 1.0 - tail[1] if length > 1 else 1.0
            if length > 1:
                probs[1:] = tail[1:length] - tail[2 : length + 1]
        out = np.asarray(probs, dtype=np.float64)
        if out.min() < -_MASS_TOL:
            raise PrecisionError(f"negative probability {out.min()!r} from differencing")
        np.clip(out, 0.0, None, out=out)
        if abs(out.sum() - 1.0) > _MASS_TOL:
            raise PrecisionError(f"mass-sum check failed: total = {out.sum()!r}")
        return out


_FLOAT_TABLES: dict[tuple[ObjectKind, Side, int], _ThresholdTable] = {}


def _float_table(kind: ObjectKind, side: Side, r: int, n: int) -> _ThresholdTable:
    key = (kind, side, r)
    table = _FLOAT_TABLES.get(key)
    if table is None or table.n_max < n:
        grow = n if table is None else max(n, table.n_max * 5 // 4)
        table = _ThresholdTable(kind, side, r, grow)
        _FLOAT_TABLES[key] = table
    return table


def pmf_float(kind: ObjectKind, n: int, r: int, side: Side) -> ComponentPMF:
    """Float distribution of the r-th ranked component size.

    Same recursion as pmf, run on counts normalised by t_n; agrees with the
    exact engine to near machine precision and raises PrecisionError if the
    mass-sum check drifts beyond 1e-9.  Feasible far beyond the exact engine
    (mappings into the high hundreds in seconds).
    """
    if n < 1:
        raise ValueError("pmf_float requires n >= 1")
    if r < 1:
        raise ValueError("pmf_float requires r >= 1")
    probs = _float_table(kind, side, r, n).pmf_column(n)
    return ComponentPMF(kind, n, r, side, tuple(float(p) for p in probs))
