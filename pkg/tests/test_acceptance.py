"""Exit criteria for the package; each test is one criterion with its time limit."""

import time

import pytest

from updown.closed_form import (
    closed_cyclic,
    closed_updown,
    closed_updown_sinform,
    cyclic_certificate,
    updown_certificate,
)
from updown.enumeration import (
    WordClass,
    brute_count,
    dp_count,
    dp_cyclic_count,
    is_member,
    iter_words,
    updown_to_weakly,
    weakly_to_updown,
)
from updown.poly_exact import (
    carlitz_p,
    carlitz_q,
    chebyshev_t,
    chebyshev_u,
    chebyshev_v,
    compose_one_minus_half_xsq,
)
from updown.series_engine import (
    cyclic_by_convolution,
    cyclic_newton,
    series_cyclic,
    series_updown,
)


def fibonacci(count):
    fib = [0, 1, 1]
    while len(fib) <= count:
        fib.append(fib[-1] + fib[-2])
    return fib


def lucas(count):
    luc = [2, 1]
    while len(luc) <= count:
        luc.append(luc[-1] + luc[-2])
    return luc


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.criterion(1, "f_{2,n} = 1 + [n = 1] for n <= 64 on every engine")
def test_binary_alphabet():
    with Timer() as t:
        series = series_updown(2, 64).counts
        for n in range(65):
            expected = 1 + (n == 1)
            assert closed_updown(2, n) == expected
            assert closed_updown_sinform(2, n) == expected
            assert series[n] == expected
            assert dp_count(2, n) == expected
            if n <= 20:
                assert brute_count(2, n, WordClass.UPDOWN) == expected
    assert t.elapsed < 1.0


@pytest.mark.criterion(2, "f_{3,n} = Fibonacci F_{n+2} for 2 <= n <= 60")
def test_fibonacci():
    fib = fibonacci(62)
    assert fib[1] == fib[2] == 1
    with Timer() as t:
        series = series_updown(3, 60).counts
        for n in range(2, 61):
            assert series[n] == fib[n + 2]
            assert closed_updown(3, n) == fib[n + 2]
            assert closed_updown_sinform(3, n) == fib[n + 2]
            assert dp_count(3, n) == fib[n + 2]
    assert t.elapsed < 1.0


@pytest.mark.criterion(3, "a_{3,2n} = Lucas L_{2n} for 1 <= n <= 30")
def test_lucas_bisection():
    luc = lucas(60)
    assert luc[1] == 1 and luc[2] == 3
    assert [luc[2 * n] for n in range(1, 5)] == [3, 7, 18, 47]
    with Timer() as t:
        series = series_cyclic(3, 60).counts
        for n in range(1, 31):
            assert series[2 * n] == luc[2 * n]
            assert cyclic_newton(3, n) == luc[2 * n]
            assert closed_cyclic(3, n) == luc[2 * n]
            assert dp_cyclic_count(3, n) == luc[2 * n]
    assert t.elapsed < 1.0


@pytest.mark.criterion(4, "a_{2,2n} = 1 for 1 <= n <= 32 on every engine")
def test_binary_cyclic():
    series = series_cyclic(2, 64).counts
    for n in range(1, 33):
        assert closed_cyclic(2, n) == 1
        assert cyclic_newton(2, n) == 1
        assert series[2 * n] == 1
        assert dp_cyclic_count(2, n) == 1


@pytest.mark.criterion(5, "engine equivalence sweep, k <= 12")
def test_engine_equivalence_sweep():
    with Timer() as t:
        for k in range(2, 13):
            f = series_updown(k, 100).counts
            for n in range(101):
                assert closed_updown(k, n) == closed_updown_sinform(k, n) == f[n] == dp_count(k, n), (k, n)
            a = series_cyclic(k, 100).counts
            for n in range(1, 51):
                assert closed_cyclic(k, n) == cyclic_newton(k, n) == a[2 * n] == dp_cyclic_count(k, n), (k, n)
    assert t.elapsed < 60.0


@pytest.mark.criterion(6, "series and brute force agree, k <= 5 / n <= 9 and cyclic k <= 4 / n <= 10")
def test_brute_force_ground_truth():
    with Timer() as t:
        for k in range(1, 6):
            f = series_updown(k, 9).counts
            for n in range(10):
                assert f[n] == brute_count(k, n, WordClass.UPDOWN), (k, n)
        for k in range(1, 5):
            a = series_cyclic(k, 10).counts
            for n in range(0, 11, 2):
                assert a[n] == brute_count(k, n, WordClass.CYCLIC_UPDOWN), (k, n)
    assert t.elapsed < 120.0


@pytest.mark.criterion(7, "Chebyshev / Carlitz-Scoville polynomial identities")
def test_polynomial_identities():
    with Timer() as t:
        for k in range(1, 51):
            assert carlitz_p(k) == compose_one_minus_half_xsq(chebyshev_u(k - 1)).shift(1)
            assert carlitz_q(k) == compose_one_minus_half_xsq(chebyshev_v(k - 1))
        for m in range(1, 51):
            assert 2 * chebyshev_t(m) == chebyshev_u(m) - chebyshev_u(m - 2)
            assert chebyshev_t(m).derivative() == m * chebyshev_u(m - 1)
        for m in range(51):
            assert chebyshev_v(m).leading == 2**m
    assert t.elapsed < 5.0


@pytest.mark.criterion(8, "weakly/strict bijection is inverse, class-preserving, count-transferring")
def test_bijection_suite():
    with Timer() as t:
        for k in range(1, 5):
            for n in (0, 2, 3, 4, 5, 6, 7, 8):
                weakly = list(iter_words(k, n, WordClass.WEAKLY_UPDOWN))
                for w in weakly:
                    u = weakly_to_updown(w)
                    assert is_member(u, WordClass.UPDOWN) and u.k == k + 1
                    assert updown_to_weakly(u) == w
                for u in iter_words(k + 1, n, WordClass.UPDOWN):
                    w = updown_to_weakly(u)
                    assert is_member(w, WordClass.WEAKLY_UPDOWN) and w.k == k
                    assert weakly_to_updown(w) == u
                assert len(weakly) == brute_count(k, n, WordClass.WEAKLY_UPDOWN)
                assert len(weakly) == dp_count(k + 1, n) == series_updown(k + 1, n).counts[n]
    assert t.elapsed < 30.0


@pytest.mark.criterion(9, "occurrence-splitting convolution identity, 2 <= k <= 6, n <= 20")
def test_convolution_identity():
    with Timer() as t:
        for k in range(2, 7):
            a_next = series_cyclic(k + 1, 40).counts
            for n in range(1, 21):
                assert a_next[2 * n] == cyclic_by_convolution(k, n), (k, n)
    assert t.elapsed < 5.0


@pytest.mark.criterion(10, "certified rounding at (12, 100) and cyclic (12, 50)")
def test_certified_rounding_stress():
    with Timer() as t:
        cert = updown_certificate(12, 100)
    assert t.elapsed < 10.0
    assert cert.value == series_updown(12, 100).counts[100] == dp_count(12, 100)

    with Timer() as t:
        cert = cyclic_certificate(12, 50)
    assert t.elapsed < 10.0
    assert cert.value == cyclic_newton(12, 50) == series_cyclic(12, 100).counts[100]
