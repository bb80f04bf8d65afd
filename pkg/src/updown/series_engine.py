"""Exact coefficient extraction from the rational generating functions.

All expansions are on-line: coefficient ``n`` depends only on earlier ones, so
each loop iteration produces one count and polls the optional cancel event.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import Cancelled, InvalidK, NonIntegerResult
from .poly_exact import IntPoly, carlitz_p, carlitz_q

VARIANTS = ("updown", "cyclic", "weakly")


@dataclass(frozen=True)
class SeriesTable:
    """Counts for word lengths ``0..len(counts)-1`` of one word class."""

    k: int
    variant: str
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")
        if self.variant == "cyclic" and any(self.counts[1::2]):
            raise ValueError("cyclic counts must vanish at odd lengths")

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1


def _poll(cancel: Optional[threading.Event]) -> None:
    if cancel is not None and cancel.is_set():
        raise Cancelled("series expansion cancelled")


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"alphabet size must be a positive integer, got {k!r}")


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"length must be a nonnegative integer, got {n!r}")


def divide_series(
    num: Sequence[int],
    den: Sequence[int],
    n_max: int,
    cancel: Optional[threading.Event] = None,
) -> list[int]:
    """First ``n_max + 1`` coefficients of num/den, for den with constant term 1."""
    if not den or den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    tail = [(j, d) for j, d in enumerate(den) if j and d]
    out: list[int] = []
    for n in range(n_max + 1):
        _poll(cancel)
        c = num[n] if n < len(num) else 0
        for j, d in tail:
            if j > n:
                break
            c -= d * out[n - j]
        out.append(c)
    return out


def series_updown(
    k: int, n_max: int, cancel: Optional[threading.Event] = None
) -> SeriesTable:
    """f_{k,n} for 0 <= n <= n_max from the expansion of (P_k + 1)/Q_k."""
    _check_k(k)
    _check_n(n_max)
    num = (carlitz_p(k) + 1).coeffs
    counts = divide_series(num, carlitz_q(k).coeffs, n_max, cancel)
    return SeriesTable(k, "updown", tuple(counts))


def count_updown(k: int, n: int, cancel: Optional[threading.Event] = None) -> int:
    """Number of up-down words of length n over an alphabet of size k."""
    return series_updown(k, n, cancel).counts[n]


def series_weakly(
    k: int, n_max: int, cancel: Optional[threading.Event] = None
) -> SeriesTable:
    """Weakly up-down counts: f_{k+1,n} except at n = 1, where every letter counts."""
    _check_k(k)
    _check_n(n_max)
    counts = series_updown(k + 1, n_max, cancel).counts
    if n_max >= 1:
        counts = counts[:1] + (k,) + counts[2:]
    return SeriesTable(k, "weakly", counts)


def series_cyclic(
    k: int, n_max: int, cancel: Optional[threading.Event] = None
) -> SeriesTable:
    """Cyclic up-down counts a_{k,n} for 0 <= n <= n_max (zero at odd n).

    Expands 1 + x^2/(4 - x^2) * (k - 1 + (2k - 1) * P_{k-1}(x)/(x Q_k(x))),
    using that U_{k-2}(1 - x^2/2) = P_{k-1}(x)/x and V_{k-1}(1 - x^2/2) = Q_k(x).
    """
    _check_k(k)
    _check_n(n_max)
    if k == 1:
        ratio = [0] * (n_max + 1)
    else:
        u_comp = carlitz_p(k - 1).coeffs[1:]
        ratio = divide_series(u_comp, carlitz_q(k).coeffs, n_max, cancel)

    # b = x^2 (k - 1 + (2k - 1) ratio); then (4 - x^2) c = b.
    b = [0] * (n_max + 1)
    for n in range(2, n_max + 1):
        b[n] = (2 * k - 1) * ratio[n - 2] + (k - 1 if n == 2 else 0)
    counts = [0] * (n_max + 1)
    for n in range(n_max + 1):
        _poll(cancel)
        numer = b[n] + (counts[n - 2] if n >= 2 else 0)
        q, r = divmod(numer, 4)
        if r:
            raise NonIntegerResult(
                f"cyclic series coefficient {n} for k={k} is {numer}/4"
            )
        counts[n] = q
    counts[0] += 1
    return SeriesTable(k, "cyclic", tuple(counts))


def linear_recurrence_signature(k: int) -> list[int]:
    """Coefficients (q_1, ..., q_d) of Q_k written in y = x^2, constant term dropped.

    Both parity subsequences of f_{k,.} eventually satisfy
    ``f[m] + q_1 f[m-2] + ... + q_d f[m-2d] == 0``.
    """
    _check_k(k)
    return list(carlitz_q(k).even_part_in_y().coeffs[1:])


def newton_power_sums(monic_tail: Sequence[int], count: int) -> list[int]:
    """Power sums p_1..p_count of the roots of y^d + a_1 y^{d-1} + ... + a_d.

    ``monic_tail`` is (a_1, ..., a_d).
    """
    d = len(monic_tail)
    p: list[int] = []
    for m in range(1, count + 1):
        s = m * monic_tail[m - 1] if m <= d else 0
        for j in range(1, min(m - 1, d) + 1):
            s += monic_tail[j - 1] * p[m - j - 1]
        p.append(-s)
    return p


def cyclic_newton(k: int, n: int) -> int:
    """a_{k,2n} as the n-th power sum of the reciprocals of the roots of Q_k(sqrt y).

    Writing Q_k(x) = q(y) with y = x^2, the roots of q are 4 cos^2(2i pi/(2k-1)),
    i = 1..k-1. The reversed polynomial y^{k-1} q(1/y) is monic because q(0) = 1,
    so its power sums are integers obtained from Newton's identities.
    """
    if not isinstance(k, int) or k < 2:
        raise InvalidK(f"the power-sum engine needs k >= 2, got {k!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"half-length must be a positive integer, got {n!r}")
    q = carlitz_q(k).even_part_in_y()
    # reversed(q) = y^d + q_1 y^{d-1} + ... + q_d, so its tail is q_1..q_d.
    return newton_power_sums(q.coeffs[1:], n)[-1]


def reciprocal_root_polynomial(k: int) -> IntPoly:
    """y^{k-1} q(1/y) where Q_k(x) = q(x^2); monic of degree k - 1."""
    _check_k(k)
    return IntPoly(tuple(reversed(carlitz_q(k).even_part_in_y().coeffs)))


def modified_odd_counts(m: int, n_max: int) -> dict[int, int]:
    """Odd-index counts of 1/x - x + F_m(x): index -1 maps to 1 and index 1 to m - 1."""
    f = series_updown(m, max(n_max, 1)).counts
    out = {-1: 1, 1: m - 1}
    for j in range(3, n_max + 1, 2):
        out[j] = f[j]
    return out


def cyclic_by_convolution(k: int, n: int) -> int:
    """a_{k+1,2n} from a_{k,2n} by splitting on the occurrences of the letter k + 1.

    Coefficient of x^{2n} in A_k(x) + (x^2/2) G_{k+1}(x) (2x + d/dx(x G_k(x))),
    where G_m = 1/x - x + F_m is the modified odd series.  The 2x term restores
    the length-one count of the second factor to k, so the sum reads
    sum_{i=1}^{n} g_{k+1,2(n-i)-1} * (i * g_{k,2i-1} + [i == 1]).
    """
    _check_k(k)
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"half-length must be a positive integer, got {n!r}")
    g_big = modified_odd_counts(k + 1, 2 * n)
    g_small = modified_odd_counts(k, 2 * n)
    conv = sum(
        g_big[2 * (n - i) - 1] * (i * g_small[2 * i - 1] + (i == 1))
        for i in range(1, n + 1)
    )
    return series_cyclic(k, 2 * n).counts[2 * n] + conv
