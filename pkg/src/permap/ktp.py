"""Cumulative cycle-count recursions for random permutations.

Knuth/Trabb Pardo-style tables, permutations only.  Two families:

  longest side   u_r(k, n) = number of n-permutations whose r-th longest
                 cycle has at most k nodes (equivalently, fewer than r
                 cycles longer than k).
  shortest side  v_r(k, n) = number of n-permutations whose r-th shortest
                 cycle has at least k nodes, where a permutation with
                 fewer than r cycles has r-th shortest size 0.

u_r obeys a proven recursion.  v_r (r >= 2) obeys a recursion with an
additive correction term, conjectural beyond the ranges on which it has
been verified; every table derived from it is flagged as such.  The
correction at k = 1 coincides with the unsigned Stirling cycle numbers,
which is checked, not explained, by the test suite.

Adjacent differences of a table column give the exact PMF of the r-th
ranked cycle size, which must (and does, in tests) match the rank-window
engine.  The float builders run the recursions on counts normalised by
n!, where the falling-factorial weights collapse to 1/n and prefix sums
make every cell O(1); n = 2500 tables build in seconds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import cache
from .kinds import ObjectKind, Side
from .exact import support_length
from .stats import ComponentPMF

_MAX_RANK = 4  # correction closed forms are only established through rank 4


@dataclass(frozen=True)
class CycleCountTable:
    rank: int
    side: Side
    k_max: int
    n_max: int
    counts: tuple[tuple[int, ...], ...]  # counts[k][n]
    conjectural: bool


# ---------------------------------------------------------------------------
# harmonic numbers, Stirling cycle numbers, the correction term

_HARMONIC: dict[int, list[Fraction]] = {}


def harmonic(m: int, power: int = 1) -> Fraction:
    """Generalised harmonic number sum_{i=1}^{m} 1/i^power, exact."""
    if m < 0:
        raise ValueError("harmonic requires m >= 0")
    seq = _HARMONIC.setdefault(power, [Fraction(0)])
    while len(seq) <= m:
        i = len(seq)
        seq.append(seq[-1] + Fraction(1, i**power))
    return seq[m]


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    """Unsigned Stirling cycle numbers c(n, 0..5)."""
    if n == 0:
        return (1, 0, 0, 0, 0, 0)
    prev = _stirling_row(n - 1)
    return tuple((prev[k - 1] if k else 0) + (n - 1) * prev[k] for k in range(6))


def stirling_cycle(n: int, k: int) -> int:
    """Number of n-permutations with exactly k cycles (k <= 5 supported)."""
    if n < 0 or k < 0:
        raise ValueError("stirling_cycle requires n, k >= 0")
    if k > 5:
        raise ValueError("only k <= 5 is tabulated")
    return _stirling_row(n)[k]


def _delta2_int(k: int, n: int) -> int:
    if k > n:
        return 0
    fact = math.factorial(n - 1)
    return sum(fact // i for i in range(1, n - k + 1))


@lru_cache(maxsize=None)
def _delta_frac(r: int, k: int, n: int) -> Fraction:
    if r == 2:
        return Fraction(_delta2_int(k, n))
    if k == 1:
        h1 = harmonic(n - 1)
        if r == 3:
            val = (h1**2 - harmonic(n - 1, 2)) / 2
        else:
            val = (h1**3 - 3 * h1 * harmonic(n - 1, 2) + 2 * harmonic(n - 1, 3)) / 6
        return math.factorial(n - 1) * val
    if n >= k:
        return _delta_frac(r, k - 1, n) - _delta_frac(r - 1, k, n) / (n - k + 1)
    return Fraction(0)


def delta(r: int, k: int, n: int) -> int:
    """Correction term of the shortest-side recursion; always an integer.

    delta(r, 1, n) equals stirling_cycle(n, r).  Integrality of the general
    case is checked on every call rather than assumed.
    """
    if r < 2 or r > _MAX_RANK:
        raise ValueError(f"correction term defined for ranks 2..{_MAX_RANK}")
    if k < 1 or n < 1:
        raise ValueError("delta requires k >= 1 and n >= 1")
    val = _delta_frac(r, k, n)
    if val.denominator != 1:
        raise ArithmeticError(f"correction term not integral at (r={r}, k={k}, n={n}): {val}")
    return val.numerator


# ---------------------------------------------------------------------------
# exact tables

def _falling(n: int, m: int) -> list[int]:
    """[ (n-1)!/(n-1-i)! for i = 0..m ] -- weights of the m-loop."""
    out = [1]
    for i in range(1, m + 1):
        out.append(out[-1] * (n - i))
    return out


def _u_rows(r: int, k_max: int, n_max: int) -> list[list[int]]:
    fact = [math.factorial(i) for i in range(n_max + 1)]
    prev = _exact_rows(Side.LARGEST, r - 1, k_max, n_max) if r > 1 else None
    rows = [[1] + [0] * n_max for _ in range(k_max + 1)]
    for n in range(1, n_max + 1):
        ff = _falling(n, n - 1)
        cut = n if r == 1 else n // r
        for k in range(k_max + 1):
            row = rows[k]
            if k >= cut:
                row[n] = fact[n]
                continue
            acc = 0
            for m in range(k):
                acc += ff[m] * row[n - 1 - m]
            if r > 1:
                pk = prev[k]
                for m in range(k, n):
                    acc += ff[m] * pk[n - 1 - m]
            row[n] = acc
    return rows


def _v_rows(r: int, k_max: int, n_max: int) -> list[list[int]]:
    fact = [math.factorial(i) for i in range(n_max + 1)]
    prev = _exact_rows(Side.SMALLEST, r - 1, k_max, n_max) if r > 1 else None
    rows = [[0] * (n_max + 1) for _ in range(k_max + 1)]
    rows[0] = fact[:]
    for k in range(1, k_max + 1):
        rows[k][0] = 1 if r == 1 else 0
    for n in range(1, n_max + 1):
        ff = _falling(n, n - 1)
        hi = n if r == 1 else n - r + 1
        for k in range(1, min(hi, k_max) + 1):
            row = rows[k]
            acc = 0 if r == 1 else delta(r, k, n)
            if r > 1:
                pk = prev[k]
                for m in range(k - 1):
                    acc += ff[m] * pk[n - 1 - m]
            for m in range(k - 1, n):
                acc += ff[m] * row[n - 1 - m]
            row[n] = acc
    return rows


_EXACT_CACHE: dict[tuple[Side, int], tuple[int, int, list[list[int]]]] = {}


def _exact_rows(side: Side, r: int, k_max: int, n_max: int) -> list[list[int]]:
    key = (side, r)
    hit = _EXACT_CACHE.get(key)
    if hit is not None and hit[0] >= k_max and hit[1] >= n_max:
        return hit[2]
    if hit is not None:
        k_max, n_max = max(k_max, hit[0]), max(n_max, hit[1])
    tag = f"ktp_{'u' if side is Side.LARGEST else 'v'}_{r}"
    rows = cache.load_counts(tag)
    if rows is not None and len(rows) > k_max and len(rows[0]) > n_max:
        k_max, n_max = len(rows) - 1, len(rows[0]) - 1
    else:
        rows = (_u_rows if side is Side.LARGEST else _v_rows)(r, k_max, n_max)
        cache.save_counts(tag, rows)
    _EXACT_CACHE[key] = (k_max, n_max, rows)
    return rows


def longest_table(r: int, k_max: int, n_max: int) -> CycleCountTable:
    """Exact counts of n-permutations whose r-th longest cycle is <= k."""
    if r < 1:
        raise ValueError("rank must be >= 1")
    rows = _exact_rows(Side.LARGEST, r, k_max, n_max)
    counts = tuple(tuple(rows[k][: n_max + 1]) for k in range(k_max + 1))
    return CycleCountTable(r, Side.LARGEST, k_max, n_max, counts, conjectural=False)


def shortest_table(r: int, k_max: int, n_max: int) -> CycleCountTable:
    """Counts of n-permutations whose r-th shortest cycle is >= k.

    Exact for r = 1; produced by the corrected recursion (conjectural) for
    ranks 2..4.
    """
    if r < 1 or r > _MAX_RANK:
        raise ValueError(f"rank must be in 1..{_MAX_RANK}")
    rows = _exact_rows(Side.SMALLEST, r, k_max, n_max)
    counts = tuple(tuple(rows[k][: n_max + 1]) for k in range(k_max + 1))
    return CycleCountTable(r, Side.SMALLEST, k_max, n_max, counts, conjectural=r > 1)


def pmf_from_tables(r: int, n: int, side: Side) -> ComponentPMF:
    """Exact PMF of the r-th ranked cycle size, by differencing a table column."""
    if n < 1 or r < 1:
        raise ValueError("pmf_from_tables requires n >= 1 and r >= 1")
    fact = math.factorial(n)
    length = support_length(n, r, side)
    if side is Side.LARGEST:
        rows = _exact_rows(side, r, n // r, n)
        cdf = [rows[k][n] for k in range(length)]
        probs = [Fraction(cdf[0], fact)]
        probs += [Fraction(cdf[k] - cdf[k - 1], fact) for k in range(1, length)]
        conj = False
    else:
        rows = _exact_rows(side, r, max(n - r + 2, 1), n)
        tail = [rows[k][n] for k in range(length + 1)] if length > 1 else [fact, 0]
        probs = [Fraction(fact - tail[1], fact)]
        probs += [Fraction(tail[k] - tail[k + 1], fact) for k in range(1, length)]
        conj = r > 1
    return ComponentPMF(ObjectKind.PERMUTATION, n, r, side, tuple(probs), conjectural=conj)


# ---------------------------------------------------------------------------
# normalised float tables

_NORM_CACHE: dict[tuple[Side, int], tuple[int, int, np.ndarray]] = {}


def _harmonic_float(n_max: int, power: int) -> np.ndarray:
    out = np.zeros(n_max + 1)
    out[1:] = np.cumsum(1.0 / np.arange(1, n_max + 1, dtype=np.float64) ** power)
    return out


def _delta_norm(r: int, k_max: int, n_max: int) -> np.ndarray:
    """D[k, n] = delta(r, k, n)/n! for the float shortest-side builder."""
    h1 = _harmonic_float(n_max, 1)
    h2 = _harmonic_float(n_max, 2)
    h3 = _harmonic_float(n_max, 3)
    D = np.zeros((k_max + 1, n_max + 1))
    ks = np.arange(k_max + 1)
    lower = None if r == 2 else _delta_norm(r - 1, k_max, n_max)
    for n in range(1, n_max + 1):
        t = min(n, k_max)
        kk = ks[1 : t + 1]
        if r == 2:
            D[kk, n] = h1[n - kk] / n
        else:
            if r == 3:
                head = (h1[n - 1] ** 2 - h2[n - 1]) / (2 * n)
            else:
                head = (h1[n - 1] ** 3 - 3 * h1[n - 1] * h2[n - 1] + 2 * h3[n - 1]) / (6 * n)
            D[1, n] = head
            if t >= 2:
                steps = lower[2 : t + 1, n] / (n - ks[2 : t + 1] + 1)
                D[2 : t + 1, n] = head - np.cumsum(steps)
    return D


def _u_norm(r: int, k_max: int, n_max: int) -> np.ndarray:
    ks = np.arange(k_max + 1)
    cum_prev = None
    W = None
    for q in range(1, r + 1):
        W = np.empty((k_max + 1, n_max + 1))
        cum = np.zeros((k_max + 1, n_max + 2))
        W[:, 0] = 1.0
        cum[:, 1] = 1.0
        for n in range(1, n_max + 1):
            t = min(n if q == 1 else n // q, k_max + 1)
            col = W[:, n]
            col[t:] = 1.0
            if t > 0:
                kk = ks[:t]
                idx = n - kk
                own = cum[kk, n] - cum[kk, idx]
                col[:t] = (own if q == 1 else own + cum_prev[kk, idx]) / n
            cum[:, n + 1] = cum[:, n] + col
        cum_prev = cum
    return W


def _v_norm(r: int, k_max: int, n_max: int) -> np.ndarray:
    ks = np.arange(k_max + 1)
    cum_prev = None
    Z = None
    for q in range(1, r + 1):
        D = _delta_norm(q, k_max, n_max) if q >= 2 else None
        Z = np.zeros((k_max + 1, n_max + 1))
        cum = np.zeros((k_max + 1, n_max + 2))
        Z[:, 0] = 1.0 if q == 1 else 0.0
        Z[0, :] = 1.0
        cum[:, 1] = Z[:, 0]
        for n in range(1, n_max + 1):
            t = min(n if q == 1 else n - q + 1, k_max)
            col = Z[:, n]
            if t >= 1:
                kk = ks[1 : t + 1]
                idx = n - kk + 1
                own = cum[kk, idx]
                if q == 1:
                    col[1 : t + 1] = own / n
                else:
                    col[1 : t + 1] = D[kk, n] + (cum_prev[kk, n] - cum_prev[kk, idx] + own) / n
            cum[:, n + 1] = cum[:, n] + col
        cum_prev = cum
    return Z


def _norm_rows(side: Side, r: int, k_max: int, n_max: int) -> np.ndarray:
    key = (side, r)
    hit = _NORM_CACHE.get(key)
    if hit is not None and hit[0] >= k_max and hit[1] >= n_max:
        return hit[2]
    if hit is not None:
        k_max, n_max = max(k_max, hit[0]), max(n_max, hit[1])
    table = (_u_norm if side is Side.LARGEST else _v_norm)(r, k_max, n_max)
    _NORM_CACHE[key] = (k_max, n_max, table)
    return table


def longest_table_norm(r: int, k_max: int, n_max: int) -> np.ndarray:
    """w[k, n] = u_r(k, n)/n! as float64, built by prefix sums."""
    if r < 1:
        raise ValueError("rank must be >= 1")
    return _norm_rows(Side.LARGEST, r, k_max, n_max)[: k_max + 1, : n_max + 1]


def shortest_table_norm(r: int, k_max: int, n_max: int) -> np.ndarray:
    """z[k, n] = v_r(k, n)/n! as float64 (conjectural recursion for r >= 2)."""
    if r < 1 or r > _MAX_RANK:
        raise ValueError(f"rank must be in 1..{_MAX_RANK}")
    return _norm_rows(Side.SMALLEST, r, k_max, n_max)[: k_max + 1, : n_max + 1]


def pmf_from_tables_float(r: int, n: int, side: Side) -> ComponentPMF:
    """Float PMF of the r-th ranked cycle size from the normalised tables."""
    if n < 1 or r < 1:
        raise ValueError("pmf_from_tables_float requires n >= 1 and r >= 1")
    length = support_length(n, r, side)
    if side is Side.LARGEST:
        table = _norm_rows(side, r, max(n // r, 1), n)
        cdf = table[:length, n]
        probs = np.diff(cdf, prepend=0.0)
        conj = False
    else:
        table = _norm_rows(side, r, max(n - r + 2, 1), n)
        tail = table[: length + 1, n]
        probs = np.empty(length)
        probs[0] = 1.0 - tail[1] if length > 1 else 1.0
        if length > 1:
            probs[1:] = tail[1:length] - tail[2 : length + 1]
        conj = r > 1
    np.clip(probs, 0.0, None, out=probs)
    return ComponentPMF(ObjectKind.PERMUTATION, n, r, side, tuple(float(p) for p in probs),
                        conjectural=conj)
