"""Cumulative cycle-count recursions and the harmonic correction term."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from permap import exact
from permap.kinds import ObjectKind, Side
from permap.ktp import (
    delta,
    harmonic,
    longest_table,
    longest_table_norm,
    pmf_from_tables,
    pmf_from_tables_float,
    shortest_table,
    shortest_table_norm,
    stirling_cycle,
)
from permap.stats import summarize

P = ObjectKind.PERMUTATION
L = Side.LARGEST
S = Side.SMALLEST


# ---------------------------------------------------------------------------
# harmonic numbers


def test_harmonic_values() -> None:
    assert harmonic(0) == 0
    assert harmonic(3) == Fraction(11, 6)
    assert harmonic(2, 2) == Fraction(5, 4)
    assert harmonic(2, 3) == Fraction(9, 8)
    for j in range(1, 40):
        assert harmonic(j) - harmonic(j - 1) == Fraction(1, j)


# ---------------------------------------------------------------------------
# count-at-most table u


def test_u_second_rank_fixture() -> None:
    table = longest_table(2, 3, 4)
    assert [table.counts[k][4] for k in (0, 1, 2)] == [6, 21, 24]
    assert table.counts[1][3] == 6
    assert not table.conjectural


def test_u_first_rank_boundaries() -> None:
    table = longest_table(1, 2, 8)
    assert table.counts[0][0] == 1
    assert all(table.counts[0][n] == 0 for n in range(1, 9))
    assert all(table.counts[1][n] == 1 for n in range(0, 9))


def test_u_saturation_and_monotonicity() -> None:
    for r in (1, 2, 3, 4):
        table = longest_table(r, 12, 12)
        for n in range(0, 13):
            bound = math.factorial(n)
            prev = 0
            for k in range(0, 13):
                value = table.counts[k][n]
                assert 0 <= value <= bound
                assert value >= prev
                if k >= n // r:
                    assert value == bound
                prev = value


# ---------------------------------------------------------------------------
# count-at-least table v and the correction term


def test_v_second_rank_fixture() -> None:
    table = shortest_table(2, 4, 4)
    assert [table.counts[k][4] for k in (1, 2, 3)] == [18, 11, 8]
    assert table.counts[1][3] == 4
    assert table.counts[1][2] == 1
    assert table.conjectural


def test_v_first_rank_fixture() -> None:
    table = shortest_table(1, 4, 3)
    assert table.counts[2][3] == 2
    assert table.counts[3][3] == 2
    assert not table.conjectural


def test_v_boundaries_and_monotonicity() -> None:
    for r in (1, 2, 3, 4):
        table = shortest_table(r, 13, 12)
        for n in range(0, 13):
            bound = math.factorial(n)
            assert table.counts[0][n] == bound
            prev = bound
            for k in range(0, 14):
                value = table.counts[k][n]
                assert 0 <= value <= bound
                assert value <= prev
                # k=0 is the all-objects column (n!) even at n=0, and rank 1
                # keeps the all-ones empty-product column at n=0
                if k > max(n - r + 1, 0) and not (r == 1 and n == 0):
                    assert value == 0
                prev = value


def test_delta_fixtures() -> None:
    assert delta(2, 1, 4) == 11
    assert delta(2, 2, 4) == 9
    assert delta(2, 3, 4) == 6
    assert delta(2, 1, 2) == 1


def test_delta_closed_form_second_rank() -> None:
    for n in range(2, 40):
        for k in range(1, n):
            want = math.factorial(n - 1) * harmonic(n - k)
            assert delta(2, k, n) == want


def test_delta_matches_stirling_at_k_one() -> None:
    for r in (2, 3, 4):
        for n in range(r, 61):
            assert delta(r, 1, n) == stirling_cycle(n, r)


def test_delta_rejects_unsupported_ranks() -> None:
    with pytest.raises(ValueError):
        delta(1, 1, 5)
    with pytest.raises(ValueError):
        delta(5, 1, 5)


def test_stirling_recurrence() -> None:
    # c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)
    for n in range(2, 30):
        for k in range(1, 5):
            assert stirling_cycle(n, k) == stirling_cycle(n - 1, k - 1) + (n - 1) * stirling_cycle(n - 1, k)


# ---------------------------------------------------------------------------
# PMFs from cumulative tables


def test_pmf_from_tables_fixtures() -> None:
    got = pmf_from_tables(2, 4, L)
    assert got.probs == (Fraction(6, 24), Fraction(15, 24), Fraction(3, 24))
    got = pmf_from_tables(2, 4, S)
    assert got.probs == (Fraction(6, 24), Fraction(7, 24), Fraction(3, 24), Fraction(8, 24))
    assert got.conjectural
    assert pmf_from_tables(2, 1, L).probs == (Fraction(1),)


def test_pmf_from_tables_matches_rank_window_engine() -> None:
    for r in (1, 2, 3, 4):
        for side in (L, S):
            for n in range(1, 26):
                assert pmf_from_tables(r, n, side).probs == exact.pmf(P, n, r, side).probs


# ---------------------------------------------------------------------------
# normalized float tables


def test_normalized_u_matches_exact() -> None:
    for r in (1, 2, 3, 4):
        table = longest_table(r, 20, 40)
        norm = longest_table_norm(r, 20, 40)
        for n in (1, 7, 23, 40):
            bound = math.factorial(n)
            for k in range(0, 21):
                want = table.counts[k][n] / bound
                assert norm[k][n] == pytest.approx(want, rel=1e-12, abs=1e-15)


def test_normalized_v_matches_exact() -> None:
    for r in (1, 2, 3, 4):
        table = shortest_table(r, 20, 40)
        norm = shortest_table_norm(r, 20, 40)
        for n in (1, 7, 23, 40):
            bound = math.factorial(n)
            for k in range(0, 21):
                want = table.counts[k][n] / bound
                assert norm[k][n] == pytest.approx(want, rel=1e-12, abs=1e-15)


def test_pmf_float_route_matches_exact_route() -> None:
    for r in (2, 3, 4):
        for side in (L, S):
            for n in (10, 25, 40):
                want = pmf_from_tables(r, n, side).probs
                got = pmf_from_tables_float(r, n, side).probs
                assert len(got) == len(want)
                for a, b in zip(got, want):
                    assert abs(a - float(b)) <= 1e-12


def test_smallest_cycle_median_thresholds() -> None:
    # raw medians of the r-th shortest cycle settle on small integers:
    # rank 3 reaches 7 just past n=370, rank 4 reaches 19 just past n=1482
    assert summarize(pmf_from_tables_float(3, 370, S)).median == 6
    assert summarize(pmf_from_tables_float(3, 371, S)).median == 7
    assert summarize(pmf_from_tables_float(4, 1482, S)).median == 18
    assert summarize(pmf_from_tables_float(4, 1483, S)).median == 19


def test_smallest_cycle_mode_thresholds() -> None:
    # rank 3 mode settles at 2 past n=49; rank 4 at 3 past n=666
    assert summarize(pmf_from_tables_float(3, 50, S)).mode == 2
    assert summarize(pmf_from_tables_float(3, 60, S)).mode == 2
    assert summarize(pmf_from_tables_float(4, 667, S)).mode == 3
