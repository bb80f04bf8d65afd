"""Trigonometric closed forms evaluated with certified rounding.

The sums involved have individual terms of size roughly
(2 sin(pi / (2(2k-1))))^-(n+1) while the total is a moderate integer, so they
are evaluated in interval arithmetic and the precision is doubled until the
enclosure pins down a single integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import InvalidK, PrecisionExhausted
from .interval import RealInterval, cos_pi, sin_pi

DEFAULT_MAX_BITS = 1 << 20


@dataclass(frozen=True)
class PrecisionPolicy:
    """Precision schedule for certified evaluation.

    Evaluation starts at ``max(initial_bits, estimate_bits(k, n))`` and doubles
    until the enclosure certifies, failing once ``max_bits`` has been tried.
    """

    initial_bits: int = 64
    max_bits: int = DEFAULT_MAX_BITS
    certify_width: Fraction = Fraction(1, 4)

    def __post_init__(self):
        object.__setattr__(self, "certify_width", Fraction(self.certify_width))
        if self.initial_bits < 1:
            raise ValueError("initial_bits must be positive")
        if self.initial_bits > self.max_bits:
            raise ValueError("initial_bits exceeds max_bits")
        if not 0 < self.certify_width < Fraction(1, 2):
            raise ValueError("certify_width must lie in (0, 1/2)")


DEFAULT_POLICY = PrecisionPolicy()


@dataclass(frozen=True)
class Certificate:
    """Integer value together with the enclosure that proves it."""

    value: int
    bits: int
    interval: RealInterval


def estimate_bits(k: int, n: int) -> int:
    """Starting precision large enough to resolve the dominant term of the sums."""
    if not isinstance(k, int) or k < 2:
        raise InvalidK(f"closed forms need k >= 2, got {k!r}")
    smallest = 2 * math.sin(math.pi / (2 * (2 * k - 1)))
    growth = max(0.0, (n + 1) * math.log2(1 / smallest))
    # k = 2 gives 2 sin(pi/6) = 1 up to float noise
    return 64 + math.ceil(growth - 1e-9) + math.ceil(math.log2(k))


def nearest_certified(x: RealInterval, width: Fraction) -> Optional[int]:
    """The integer m with x inside (m - width, m + width), if x is that narrow."""
    if x.width >= width:
        return None
    m = math.floor(x.lo + Fraction(1, 2))
    if m - width < x.lo and x.hi < m + width:
        return m
    return None


def certify(
    expression: Callable[[int], Optional[RealInterval]],
    start_bits: int,
    policy: PrecisionPolicy = DEFAULT_POLICY,
) -> Certificate:
    """Evaluate ``expression(bits)`` at doubling precision until it certifies.

    ``expression`` may return None or raise ZeroDivisionError to ask for more
    precision (e.g. when a sum's enclosure still straddles zero).
    """
    bits = min(max(start_bits, policy.initial_bits), policy.max_bits)
    while True:
        try:
            x = expression(bits)
        except ZeroDivisionError:
            x = None
        if x is not None:
            m = nearest_certified(x, policy.certify_width)
            if m is not None:
                return Certificate(m, bits, x)
        if bits >= policy.max_bits:
            raise PrecisionExhausted(f"no certified integer at {bits} bits")
        bits = min(2 * bits, policy.max_bits)


def _check(k: int, n: int, min_n: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise InvalidK(f"closed forms need k >= 2, got {k!r}")
    if not isinstance(n, int) or n < min_n:
        raise ValueError(f"n must be an integer >= {min_n}, got {n!r}")


def _cos_form(k: int, n: int) -> Callable[[int], Optional[RealInterval]]:
    m = 2 * k - 1

    def expr(bits: int) -> Optional[RealInterval]:
        total = RealInterval.exact(0, bits)
        for i in range(1, k):
            angle = Fraction(2 * i, m)
            inv = (cos_pi(angle, bits) * 2).reciprocal()
            total = total + sin_pi(angle, bits).square() * inv ** (n + 1)
        if total.contains_zero():
            return None
        return abs(total).scale2(2).div_int(m)

    return expr


def _sin_form(k: int, n: int) -> Callable[[int], Optional[RealInterval]]:
    m = 2 * k - 1
    alternating = n % 2 == 0

    def expr(bits: int) -> RealInterval:
        total = RealInterval.exact(0, bits)
        for i in range(1, k):
            angle = Fraction(2 * i - 1, 2 * m)
            term = cos_pi(angle, bits).square() * sin_pi(angle, bits).reciprocal() ** (n + 1)
            total = total - term if alternating and i % 2 == 0 else total + term
        return total.scale2(1 - n).div_int(m)

    return expr


def _cyclic_form(k: int, n: int) -> Callable[[int], RealInterval]:
    m = 2 * k - 1

    def expr(bits: int) -> RealInterval:
        total = RealInterval.exact(0, bits)
        for i in range(1, k):
            inv = (cos_pi(Fraction(2 * i, m), bits) * 2).reciprocal()
            total = total + inv.square() ** n
        return total

    return expr


def updown_certificate(
    k: int, n: int, policy: PrecisionPolicy = DEFAULT_POLICY
) -> Certificate:
    _check(k, n, 0)
    return certify(_cos_form(k, n), estimate_bits(k, n), policy)


def sinform_certificate(
    k: int, n: int, policy: PrecisionPolicy = DEFAULT_POLICY
) -> Certificate:
    _check(k, n, 0)
    return certify(_sin_form(k, n), estimate_bits(k, n), policy)


def cyclic_certificate(
    k: int, n: int, policy: PrecisionPolicy = DEFAULT_POLICY
) -> Certificate:
    _check(k, n, 1)
    return certify(_cyclic_form(k, n), estimate_bits(k, 2 * n), policy)


def closed_updown(k: int, n: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> int:
    """f_{k,n} from the cosine-power closed form."""
    return (n == 1) + updown_certificate(k, n, policy).value


def closed_updown_sinform(
    k: int, n: int, policy: PrecisionPolicy = DEFAULT_POLICY
) -> int:
    """f_{k,n} from the parity-split sine-power form."""
    return (n == 1) + sinform_certificate(k, n, policy).value


def closed_cyclic(k: int, n: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> int:
    """a_{k,2n} as the sum of (2 cos(2 i pi / (2k - 1)))^(-2n), i = 1..k-1."""
    return cyclic_certificate(k, n, policy).value
