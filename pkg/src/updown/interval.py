"""Outward-rounded fixed-point interval arithmetic at arbitrary precision.

An interval at precision ``b`` stores integer mantissas ``lo_m <= hi_m`` and
denotes ``[lo_m / 2**b, hi_m / 2**b]``.  Every operation floors the lower and
ceils the upper endpoint, so the true value of any expression built from exact
inputs stays enclosed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

Number = Union[int, Fraction]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _ceil_shift(a: int, s: int) -> int:
    return -((-a) >> s)


class RealInterval:
    __slots__ = ("lo_m", "hi_m", "bits")

    def __init__(self, lo_m: int, hi_m: int, bits: int):
        if bits < 1:
            raise ValueError("precision must be positive")
        if lo_m > hi_m:
            raise ValueError("empty interval")
        self.lo_m = lo_m
        self.hi_m = hi_m
        self.bits = bits

    @classmethod
    def exact(cls, q: Number, bits: int) -> RealInterval:
        """Tightest enclosure of the rational ``q``."""
        q = Fraction(q)
        num = q.numerator << bits
        return cls(num // q.denominator, _ceil_div(num, q.denominator), bits)

    @property
    def lo(self) -> Fraction:
        return Fraction(self.lo_m, 1 << self.bits)

    @property
    def hi(self) -> Fraction:
        return Fraction(self.hi_m, 1 << self.bits)

    @property
    def width(self) -> Fraction:
        return Fraction(self.hi_m - self.lo_m, 1 << self.bits)

    def contains(self, q: Number) -> bool:
        return self.lo <= q <= self.hi

    def contains_zero(self) -> bool:
        return self.lo_m <= 0 <= self.hi_m

    def _same(self, other: RealInterval) -> None:
        if self.bits != other.bits:
            raise ValueError("intervals at different precisions")

    def __add__(self, other: Union[RealInterval, Number]) -> RealInterval:
        if not isinstance(other, RealInterval):
            other = RealInterval.exact(other, self.bits)
        self._same(other)
        return RealInterval(self.lo_m + other.lo_m, self.hi_m + other.hi_m, self.bits)

    __radd__ = __add__

    def __neg__(self) -> RealInterval:
        return RealInterval(-self.hi_m, -self.lo_m, self.bits)

    def __sub__(self, other: Union[RealInterval, Number]) -> RealInterval:
        return self + (-other)

    def __rsub__(self, other: Number) -> RealInterval:
        return (-self) + other

    def __mul__(self, other: Union[RealInterval, Number]) -> RealInterval:
        if isinstance(other, int):
            lo, hi = self.lo_m * other, self.hi_m * other
            return RealInterval(min(lo, hi), max(lo, hi), self.bits)
        if isinstance(other, Fraction):
            return (self * other.numerator).div_int(other.denominator)
        if not isinstance(other, RealInterval):
            return NotImplemented
        self._same(other)
        prods = (
            self.lo_m * other.lo_m,
            self.lo_m * other.hi_m,
            self.hi_m * other.lo_m,
            self.hi_m * other.hi_m,
        )
        b = self.bits
        return RealInterval(min(prods) >> b, _ceil_shift(max(prods), b), b)

    __rmul__ = __mul__

    def div_int(self, d: int) -> RealInterval:
        if d == 0:
            raise ZeroDivisionError("division by zero")
        if d < 0:
            return (-self).div_int(-d)
        return RealInterval(self.lo_m // d, _ceil_div(self.hi_m, d), self.bits)

    def scale2(self, e: int) -> RealInterval:
        """Multiply by 2**e."""
        if e >= 0:
            return RealInterval(self.lo_m << e, self.hi_m << e, self.bits)
        return RealInterval(self.lo_m >> -e, _ceil_shift(self.hi_m, -e), self.bits)

    def reciprocal(self) -> RealInterval:
        if self.contains_zero():
            raise ZeroDivisionError("interval contains zero")
        if self.hi_m < 0:
            return -(-self).reciprocal()
        one = 1 << (2 * self.bits)
        return RealInterval(one // self.hi_m, _ceil_div(one, self.lo_m), self.bits)

    def __truediv__(self, other: Union[RealInterval, Number]) -> RealInterval:
        if isinstance(other, int):
            return self.div_int(other)
        if isinstance(other, Fraction):
            return (self * other.denominator).div_int(other.numerator)
        return self * other.reciprocal()

    def __abs__(self) -> RealInterval:
        if self.lo_m >= 0:
            return self
        if self.hi_m <= 0:
            return -self
        return RealInterval(0, max(-self.lo_m, self.hi_m), self.bits)

    def square(self) -> RealInterval:
        a = abs(self)
        b = self.bits
        return RealInterval((a.lo_m * a.lo_m) >> b, _ceil_shift(a.hi_m * a.hi_m, b), b)

    def __pow__(self, e: int) -> RealInterval:
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        if self.hi_m < 0:
            mag = (-self) ** e
            return -mag if e % 2 else mag
        if self.lo_m < 0:
            # straddles zero
            mag = abs(self) ** e
            if e % 2 == 0:
                return mag
            return RealInterval(-mag.hi_m, mag.hi_m, self.bits)
        result = RealInterval.exact(1, self.bits)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base.square()
        return result

    def __repr__(self) -> str:
        return f"RealInterval([{float(self.lo)!r}, {float(self.hi)!r}], bits={self.bits})"


def _guard(bits: int) -> int:
    return 32 + bits.bit_length()


def _widen(center: int, err: int, guard: int, bits: int) -> RealInterval:
    """Round ``[center - err, center + err]`` (at bits + guard) outward to ``bits``."""
    return RealInterval((center - err) >> guard, _ceil_shift(center + err, guard), bits)


def _arctan_inv(m: int, w: int) -> tuple[int, int]:
    """arctan(1/m) * 2**w as (value, error bound in ulps)."""
    total = 0
    power = (1 << w) // m
    m2 = m * m
    j = 0
    while power:
        term = power // (2 * j + 1)
        total += -term if j % 2 else term
        power //= m2
        j += 1
    # each term truncates by < 1 ulp; omitted tail < 1 ulp
    return total, j + 1


@lru_cache(maxsize=64)
def pi_interval(bits: int) -> RealInterval:
    """Enclosure of pi via Machin's formula."""
    g = _guard(bits)
    w = bits + g
    a5, e5 = _arctan_inv(5, w)
    a239, e239 = _arctan_inv(239, w)
    return _widen(16 * a5 - 4 * a239, 16 * e5 + 4 * e239, g, bits)


def _taylor_point(x_m: int, w: int, odd: bool) -> tuple[int, int]:
    """sin (odd) or cos of x = x_m / 2**w, 0 <= x <= 1, as (value, error ulps).

    A term carrying error e ulps passes on at most e/2 + 1 to the next one since
    x**2 / ((j+1)(j+2)) <= 1/2, so every computed term is off by < 2 ulps and the
    alternating tail after the first zero term is below 3 ulps.
    """
    term = x_m if odd else 1 << w
    total = term
    j = 1 if odd else 0
    sign = 1
    count = 1
    sq = x_m * x_m
    shift = 2 * w
    while term:
        term = (term * sq) // (((j + 1) * (j + 2)) << shift)
        j += 2
        sign = -sign
        total += sign * term
        count += 1
    return total, 2 * count + 3


def _reduced_trig(x: RealInterval, odd: bool) -> RealInterval:
    """sin or cos of an interval inside [0, 1], using monotonicity on [0, pi/2]."""
    if x.lo_m < 0 or x.hi_m > (1 << x.bits):
        raise ValueError("reduced argument outside [0, 1]")
    b = x.bits
    g = _guard(b)
    w = b + g
    lo_val, lo_err = _taylor_point(x.lo_m << g, w, odd)
    hi_val, hi_err = _taylor_point(x.hi_m << g, w, odd)
    at_lo = _widen(lo_val, lo_err, g, b)
    at_hi = _widen(hi_val, hi_err, g, b)
    if odd:
        return RealInterval(at_lo.lo_m, at_hi.hi_m, b)
    return RealInterval(at_hi.lo_m, at_lo.hi_m, b)


@lru_cache(maxsize=4096)
def cos_pi(r: Fraction, bits: int) -> RealInterval:
    """Enclosure of cos(pi * r) for rational r.

    The argument is folded exactly on the rational r into [0, 1/4] so the
    Taylor series only ever sees |x| <= pi/4.
    """
    r = Fraction(r) % 2
    if r > 1:
        r = 2 - r
    sign = 1
    if r > Fraction(1, 2):
        r = 1 - r
        sign = -1
    if r > Fraction(1, 4):
        val = _reduced_trig(pi_interval(bits) * (Fraction(1, 2) - r), odd=True)
    else:
        val = _reduced_trig(pi_interval(bits) * r, odd=False)
    return val if sign > 0 else -val


def sin_pi(r: Fraction, bits: int) -> RealInterval:
    """Enclosure of sin(pi * r) for rational r."""
    return cos_pi(Fraction(1, 2) - Fraction(r), bits)
