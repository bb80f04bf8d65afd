import itertools
import threading

import pytest
from hypothesis import given, settings, strategies as st

from updown.enumeration import dp_count, dp_cyclic_count
from updown.errors import Cancelled, InvalidK
from updown.series_engine import (
    SeriesTable,
    count_updown,
    cyclic_by_convolution,
    cyclic_newton,
    divide_series,
    linear_recurrence_signature,
    newton_power_sums,
    reciprocal_root_polynomial,
    series_cyclic,
    series_updown,
    series_weakly,
)


def brute_updown(k, n):
    def ok(w):
        return all((w[i - 1] < w[i]) if i % 2 else (w[i - 1] > w[i]) for i in range(1, len(w)))

    return sum(ok(w) for w in itertools.product(range(1, k + 1), repeat=n))


def brute_cyclic(k, n):
    if n % 2:
        return 0
    if n == 0:
        return 1

    def ok(w):
        return all((w[i - 1] < w[i]) if i % 2 else (w[i - 1] > w[i]) for i in range(1, n)) and w[-1] > w[0]

    return sum(ok(w) for w in itertools.product(range(1, k + 1), repeat=n))


def test_series_updown_examples():
    assert series_updown(2, 5).counts == (1, 2, 1, 1, 1, 1)
    assert series_updown(3, 6).counts == (1, 3, 3, 5, 8, 13, 21)
    assert series_updown(1, 4).counts == tuple(brute_updown(1, n) for n in range(5))


def test_count_updown_examples():
    assert count_updown(4, 2) == brute_updown(4, 2) == 6
    assert all(count_updown(k, 0) == 1 for k in range(1, 8))
    assert count_updown(3, 3) == 5


def test_series_cyclic_examples():
    assert series_cyclic(2, 8).counts[::2] == (1, 1, 1, 1, 1)
    assert series_cyclic(3, 8).counts[::2] == (1, 3, 7, 18, 47)
    assert series_cyclic(3, 2).counts == (1, 0, 3)


def test_series_cyclic_k1_has_only_empty_word():
    assert series_cyclic(1, 10).counts == (1,) + (0,) * 10


def test_cyclic_newton_examples():
    assert cyclic_newton(3, 2) == 7
    assert cyclic_newton(2, 5) == 1
    assert cyclic_newton(4, 1) == brute_cyclic(4, 2) == 6


def test_cyclic_newton_rejects_small_k():
    with pytest.raises(InvalidK):
        cyclic_newton(1, 3)
    with pytest.raises(ValueError):
        cyclic_newton(3, 0)


def test_linear_recurrence_signature_examples():
    assert linear_recurrence_signature(2) == [-1]
    assert linear_recurrence_signature(3) == [-3, 1]
    assert linear_recurrence_signature(1) == []


def test_newton_power_sums_small():
    # roots 1, 2, 3: y^3 - 6y^2 + 11y - 6
    assert newton_power_sums([-6, 11, -6], 4) == [6, 14, 36, 98]


def test_reciprocal_root_polynomial_is_monic():
    for k in range(1, 20):
        p = reciprocal_root_polynomial(k)
        assert p.leading == 1
        assert p.degree == k - 1


def test_divide_series_rejects_bad_denominator():
    with pytest.raises(ValueError):
        divide_series([1], [2, 1], 3)


def test_series_table_invariants():
    with pytest.raises(ValueError):
        SeriesTable(2, "cyclic", (1, 1))
    with pytest.raises(ValueError):
        SeriesTable(2, "nope", (1,))
    with pytest.raises(ValueError):
        SeriesTable(2, "updown", (1, -1))


def test_weakly_series():
    t = series_weakly(2, 6)
    assert t.counts[0] == 1
    assert t.counts[1] == 2
    assert t.counts[2:] == series_updown(3, 6).counts[2:]


def test_cancellation():
    ev = threading.Event()
    ev.set()
    with pytest.raises(Cancelled):
        series_updown(5, 1000, cancel=ev)
    with pytest.raises(Cancelled):
        series_cyclic(5, 1000, cancel=ev)


def test_cancellation_polled_per_coefficient():
    calls = []

    class Counting:
        def is_set(self):
            calls.append(1)
            return False

    series_updown(4, 30, cancel=Counting())
    assert len(calls) >= 31


@pytest.mark.parametrize("k", range(1, 13))
def test_series_matches_transfer_matrix(k):
    counts = series_updown(k, 100).counts
    assert list(counts) == [dp_count(k, n) for n in range(101)]


@pytest.mark.parametrize("k", range(2, 13))
def test_cyclic_series_matches_newton(k):
    counts = series_cyclic(k, 100).counts
    assert [counts[2 * n] for n in range(1, 51)] == [cyclic_newton(k, n) for n in range(1, 51)]


@pytest.mark.parametrize("k", range(1, 7))
def test_cyclic_series_matches_transfer_matrix(k):
    counts = series_cyclic(k, 40).counts
    assert [counts[2 * n] for n in range(21)] == [dp_cyclic_count(k, n) for n in range(21)]


@pytest.mark.parametrize("k", range(2, 7))
def test_convolution_identity(k):
    for n in range(1, 21):
        assert series_cyclic(k + 1, 2 * n).counts[2 * n] == cyclic_by_convolution(k, n)


@pytest.mark.parametrize("k", range(1, 13))
def test_recurrence_signature_annihilates_series(k):
    sig = linear_recurrence_signature(k)
    f = series_updown(k, 200).counts
    start = 2 * len(sig) + 2  # past the numerator degree 2k - 1
    for m in range(max(start, 2 * k), 201):
        assert f[m] + sum(q * f[m - 2 * j] for j, q in enumerate(sig, 1)) == 0


def test_monotone_in_alphabet():
    for k in range(1, 12):
        lo, hi = series_updown(k, 60).counts, series_updown(k + 1, 60).counts
        assert all(a <= b for a, b in zip(lo, hi))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(0, 7))
def test_series_matches_brute_force(k, n):
    assert count_updown(k, n) == brute_updown(k, n)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(0, 4))
def test_cyclic_series_matches_brute_force(k, half):
    assert series_cyclic(k, 2 * half).counts[2 * half] == brute_cyclic(k, 2 * half)
