"""Exact integer polynomials and the Chebyshev / Carlitz-Scoville families.

Coefficients are stored densely in ascending order, so ``IntPoly((1, 0, -3, 0, 1))``
is ``1 - 3x^2 + x^4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence, Union

from .errors import NonIntegerResult


def _strip(coeffs: Iterable) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def binomial(a: int, b: int) -> int:
    """C(a, b), taken to be zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = _strip(self.coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"IntPoly coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Union[IntPoly, int]) -> IntPoly:
        other = _as_poly(other)
        n = max(len(self), len(other))
        return IntPoly(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union[IntPoly, int]) -> IntPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: int) -> IntPoly:
        return _as_poly(other) - self

    def __mul__(self, other: Union[IntPoly, int]) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def shift(self, m: int) -> IntPoly:
        """Multiply by x**m."""
        if not self:
            return self
        return IntPoly((0,) * m + self.coeffs)

    def derivative(self) -> IntPoly:
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def is_even(self) -> bool:
        """True when only even powers of x carry nonzero coefficients."""
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def even_part_in_y(self) -> IntPoly:
        """Rewrite an even polynomial p(x) as q(y) with y = x**2."""
        if not self.is_even():
            raise ValueError("polynomial has odd-degree terms")
        return IntPoly(self.coeffs[0::2])

    def __str__(self) -> str:
        return format_poly(self.coeffs)


def _as_poly(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly((p,))
    raise TypeError(f"cannot use {type(p).__name__} as IntPoly")


def format_poly(coeffs: Sequence, var: str = "x") -> str:
    """Render ascending coefficients as e.g. ``1 - 3x^2 + x^4``."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class DyadicPoly:
    """Polynomial whose coefficients are rationals with power-of-two denominators."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in _strip(self.coeffs))
        for c in coeffs:
            d = c.denominator
            if d & (d - 1):
                raise ValueError(f"{c} is not a dyadic rational")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_int(cls, p: IntPoly) -> DyadicPoly:
        return cls(tuple(Fraction(c) for c in p.coeffs))

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: DyadicPoly) -> DyadicPoly:
        n = max(len(self), len(other))
        return DyadicPoly(tuple(self[i] + other[i] for i in range(n)))

    def __mul__(self, other: DyadicPoly) -> DyadicPoly:
        if not self.coeffs or not other.coeffs:
            return DyadicPoly()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return DyadicPoly(tuple(out))

    def to_int(self) -> IntPoly:
        bad = [c for c in self.coeffs if c.denominator != 1]
        if bad:
            raise NonIntegerResult(f"coefficient {bad[0]} is not an integer")
        return IntPoly(tuple(c.numerator for c in self.coeffs))


_ONE_MINUS_HALF_XSQ = DyadicPoly((Fraction(1), Fraction(0), Fraction(-1, 2)))


def compose_one_minus_half_xsq(p: IntPoly) -> IntPoly:
    """Return p(1 - x^2/2), raising NonIntegerResult if it is not integral."""
    acc = DyadicPoly()
    for c in reversed(p.coeffs):
        acc = acc * _ONE_MINUS_HALF_XSQ + DyadicPoly((Fraction(c),))
    return acc.to_int()


def _three_term(first: IntPoly, second: IntPoly, m: int) -> IntPoly:
    if m == 0:
        return first
    prev, cur = first, second
    two_x = IntPoly((0, 2))
    for _ in range(m - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def _check_degree(m: int) -> None:
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {m!r}")


@lru_cache(maxsize=None)
def chebyshev_t(m: int) -> IntPoly:
    """Chebyshev polynomial of the first kind, T_m."""
    _check_degree(m)
    return _three_term(IntPoly((1,)), IntPoly((0, 1)), m)


@lru_cache(maxsize=None)
def chebyshev_u(m: int) -> IntPoly:
    """Chebyshev polynomial of the second kind, U_m.

    ``m = -1`` is accepted and gives the zero polynomial, which is the value
    the three-term recurrence extends to.
    """
    if m == -1:
        return IntPoly()
    _check_degree(m)
    return _three_term(IntPoly((1,)), IntPoly((0, 2)), m)


@lru_cache(maxsize=None)
def chebyshev_v(m: int) -> IntPoly:
    """Chebyshev polynomial of the third kind, V_m = U_m - U_{m-1}."""
    _check_degree(m)
    return chebyshev_u(m) - chebyshev_u(m - 1)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"alphabet size must be a positive integer, got {k!r}")


@lru_cache(maxsize=None)
def carlitz_p(k: int) -> IntPoly:
    """Numerator P_k of the odd-length generating function."""
    _check_k(k)
    coeffs = [0] * (2 * k + 2)
    for i in range(k + 1):
        coeffs[2 * i + 1] = (-1) ** i * binomial(k + i, 2 * i + 1)
    return IntPoly(tuple(coeffs))


@lru_cache(maxsize=None)
def carlitz_q(k: int) -> IntPoly:
    """Denominator Q_k shared by the odd- and even-length generating functions."""
    _check_k(k)
    coeffs = [0] * (2 * k + 1)
    for i in range(k + 1):
        coeffs[2 * i] = (-1) ** i * binomial(k + i - 1, 2 * i)
    return IntPoly(tuple(coeffs))
