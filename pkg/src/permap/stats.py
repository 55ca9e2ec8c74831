"""Distribution container and summary statistics for ranked component sizes.

A ComponentPMF is the distribution of the size of the r-th largest (or
r-th smallest) component of a random n-object.  Index k of ``probs`` is
P{size = k}; k = 0 carries the convention that an object with fewer than
r components has r-th ranked size 0.

Normalisations follow the finite-n table conventions:

    largest side:   mean/n, variance/n^2, median/n, mode/n
    smallest side:  permutations  mean/log(n)^r,        variance/(n log(n)^(r-1))
                    mappings      mean/(sqrt(n) log(n)^(r-1)),
                                  variance/(n^(3/2) log(n)^(r-1))
                    median/n; the mode is reported raw (no table normalises it)

The median is the greatest k whose CDF is still below one half -- the
floor of the point where the cumulative distribution crosses 1/2.  The
finite-n reference medians (both sides, both kinds, transition claims
included) all follow this convention and not the usual least k with
CDF >= 1/2, which lands one node higher whenever the crossing falls
strictly inside a step.  Modes are the least maximiser.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .kinds import ObjectKind, Side

Prob = Union[Fraction, float]


@dataclass(frozen=True)
class ComponentPMF:
    kind: ObjectKind
    n: int
    rank: int
    side: Side
    probs: tuple[Prob, ...]  # index k = P{ranked component size = k}
    conjectural: bool = False  # True when produced by the conjectured recursion

    def mass(self) -> Prob:
        return sum(self.probs)

    def cdf(self) -> list[Prob]:
        out, acc = [], 0
        for p in self.probs:
            acc += p
            out.append(acc)
        return out


@dataclass(frozen=True)
class SummaryStats:
    mean: Prob
    variance: Prob
    median: int
    mode: int
    normalized_mean: float
    normalized_variance: float
    normalized_median: float
    normalized_mode: float


def _median(probs: Sequence[Prob]) -> int:
    acc = 0
    best = 0
    half = Fraction(1, 2) if isinstance(probs[0], Fraction) else 0.5
    for k, p in enumerate(probs):
        acc += p
        if acc < half:
            best = k
        else:
            break
    return best


def _mode(probs: Sequence[Prob]) -> int:
    best, arg = probs[0], 0
    for k, p in enumerate(probs):
        if p > best:
            best, arg = p, k
    return arg


def summarize(pmf: ComponentPMF) -> SummaryStats:
    """Mean, variance, median, mode of a ComponentPMF, raw and normalised."""
    probs = pmf.probs
    mean = sum(k * p for k, p in enumerate(probs))
    second = sum(k * k * p for k, p in enumerate(probs))
    variance = second - mean * mean
    median = _median(probs)
    mode = _mode(probs)

    n, r = pmf.n, pmf.rank
    logn = math.log(n)
    if pmf.side is Side.LARGEST:
        norm_mean = float(mean) / n
        norm_var = float(variance) / n**2
        norm_median = median / n
        norm_mode = mode / n
    else:
        if logn == 0.0:
            norm_mean = norm_var = math.nan  # n = 1: no meaningful scale
        elif pmf.kind is ObjectKind.PERMUTATION:
            norm_mean = float(mean) / logn**r
            norm_var = float(variance) / (n * logn ** (r - 1))
        else:
            norm_mean = float(mean) / (math.sqrt(n) * logn ** (r - 1))
            norm_var = float(variance) / (n ** 1.5 * logn ** (r - 1))
        norm_median = median / n
        norm_mode = float(mode)
    return SummaryStats(mean, variance, median, mode,
                        norm_mean, norm_var, norm_median, norm_mode)
