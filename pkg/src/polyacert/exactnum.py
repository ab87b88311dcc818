"""Exact rational arithmetic and directed-rounding enclosures.

Everything on the certification path runs on ``fractions.Fraction`` (exact,
always canonical) plus enclosures of the three irrational quantities the
bound functions need: pi, square roots, and arccos.  An enclosure is a
``BoundPair`` of rationals ``lo <= x <= hi`` whose width is controlled by a
decimal precision ``k`` (target width <= 10^-k).

Internally the enclosures are computed in fixed-point decimal arithmetic:
a real x is represented by an integer v ~ x * S with S = 10^prec, and every
operation rounds v toward -inf (lower bounds) or +inf (upper bounds).  Floor
and ceiling division on integers give the directed rounding for free,
including correct behaviour on negative values.  The scaled-integer helpers
(`sqrt_scaled`, `arccos_scaled`, ...) are also used directly by the bound
functions, where building a Fraction per intermediate would dominate the
run time of the certification sweep.

arccos is reduced to arcsin, whose Maclaurin series has positive
coefficients on [0, 1): partial sums rounded down are rigorous lower
bounds, and an explicit geometric tail bound closes the upper bound.  For
arguments above 1/sqrt(2) the identity arccos(q) = 2*arcsin(sqrt((1-q)/2))
keeps the series argument small enough for fast, provable convergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

# floor(pi * 10^60); enough stored digits for any precision the package uses.
_PI_SCALED = 3141592653589793238462643383279502884197169399375105820974944
_PI_STORED = 60

#: Largest supported decimal precision for enclosures.
MAX_PRECISION = 50


class PrecisionError(ValueError):
    """Requested precision exceeds the stored digits of a constant."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of the operation."""


def rat_floor(q: Fraction) -> int:
    """Exact floor: the unique integer n with n <= q < n + 1."""
    return math.floor(q)


@dataclass(frozen=True)
class BoundPair:
    """Rational enclosure lo <= x <= hi of an unknown real x."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"inverted enclosure [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi


# ---------------------------------------------------------------------------
# Scaled-integer core.  A value x is carried as an int v with v ~ x * S,
# S a power of ten.  All helpers take and return plain ints.
# ---------------------------------------------------------------------------

def ceil_div(a: int, b: int) -> int:
    """ceil(a / b) for b > 0."""
    return -((-a) // b)


def isqrt_up(n: int) -> int:
    """Smallest integer s with s*s >= n (n >= 0)."""
    s = math.isqrt(n)
    return s if s * s == n else s + 1


def from_fraction_scaled(q: Fraction, scale: int, up: bool) -> int:
    """Directed rounding of a rational onto the 1/scale grid."""
    num = q.numerator * scale
    if up:
        return ceil_div(num, q.denominator)
    return num // q.denominator


def pi_scaled(prec: int) -> tuple[int, int]:
    """(floor, ceil) of pi * 10^prec from the stored digits."""
    if not 1 <= prec <= _PI_STORED:
        raise PrecisionError(f"pi available to {_PI_STORED} digits, requested {prec}")
    lo = _PI_SCALED // 10 ** (_PI_STORED - prec)
    return lo, lo + 1  # pi has no finite decimal expansion, so ceil = floor + 1


def sqrt_scaled(q: Fraction, prec: int, up: bool) -> int:
    """Directed sqrt(q) * 10^prec for q >= 0, exact square root of the
    directed rounding of q * 10^(2 prec)."""
    if q < 0:
        raise DomainError(f"sqrt of negative rational {q}")
    scale2 = 10 ** (2 * prec)
    if up:
        return isqrt_up(ceil_div(q.numerator * scale2, q.denominator))
    return math.isqrt((q.numerator * scale2) // q.denominator)


def _arcsin_series_scaled(x: int, scale: int, up: bool) -> int:
    """Directed arcsin(x / scale) * scale for 0 <= x/scale <= ~0.708.

    Term recurrence a_{n+1} = a_n * x^2 * (2n+1)^2 / ((2n+2)(2n+3)); every
    term is positive and the ratio is < x^2 <= 0.502, so truncated sums
    rounded down are lower bounds and a geometric tail closes the upper
    bound (tail after a term t <= 2/scale is < 4.1/scale; 5 covers it).
    """
    if x <= 0:
        return 0
    xx = x * x
    s2 = scale * scale
    term = x
    total = x
    n = 0
    while True:
        num = term * xx * (2 * n + 1) ** 2
        den = s2 * (2 * n + 2) * (2 * n + 3)
        term = ceil_div(num, den) if up else num // den
        if up and term <= 2:
            return total + term + 5
        if not up and term == 0:
            return total
        total += term
        n += 1


def arccos_scaled(q: Fraction, prec: int) -> tuple[int, int]:
    """(lower, upper) of arccos(q) * 10^prec for rational q in [0, 1]."""
    if not 0 <= q <= 1:
        raise DomainError(f"arccos argument {q} outside [0, 1]")
    scale = 10 ** prec
    if q == 1:
        return 0, 0
    pi_lo, pi_hi = pi_scaled(prec)
    if q == 0:
        return pi_lo // 2, ceil_div(pi_hi, 2)
    if q * q <= Fraction(1, 2):
        # arccos(q) = pi/2 - arcsin(q); arcsin is increasing, so round the
        # argument outward before summing the series.
        x_lo = from_fraction_scaled(q, scale, up=False)
        x_hi = from_fraction_scaled(q, scale, up=True)
        asin_lo = _arcsin_series_scaled(x_lo, scale, up=False)
        asin_hi = _arcsin_series_scaled(x_hi, scale, up=True)
        return pi_lo // 2 - asin_hi, ceil_div(pi_hi, 2) - asin_lo
    # q > 1/sqrt(2): arccos(q) = 2 arcsin(w), w = sqrt((1-q)/2) < 0.3827,
    # where the series converges much faster than at the raw argument.
    w = (1 - q) / 2
    w_lo = sqrt_scaled(w, prec, up=False)
    w_hi = sqrt_scaled(w, prec, up=True)
    return (2 * _arcsin_series_scaled(w_lo, scale, up=False),
            2 * _arcsin_series_scaled(w_hi, scale, up=True))


# ---------------------------------------------------------------------------
# Rational-facing enclosure operations.
# ---------------------------------------------------------------------------

#: Guard digits used when an operation is computed at a working precision
#: above the requested one, so accumulated rounding stays below 10^-k.
GUARD_DIGITS = 6


def pi_bounds(k: int) -> BoundPair:
    """Enclosure of pi of width <= 10^-k from stored digits (two cushion
    digits beyond the request, so e.g. the classical convergents 333/106 and
    355/113 are already separated at k = 5)."""
    if not 1 <= k <= MAX_PRECISION:
        raise PrecisionError(f"pi_bounds supports 1 <= k <= {MAX_PRECISION}, got {k}")
    lo, hi = pi_scaled(k + 2)
    s = 10 ** (k + 2)
    return BoundPair(Fraction(lo, s), Fraction(hi, s))


def sqrt_bounds(q: Fraction, k: int) -> BoundPair:
    """Enclosure of sqrt(q) of width <= 10^-k, verified by exact squaring."""
    if k < 1:
        raise PrecisionError(f"precision must be >= 1, got {k}")
    q = Fraction(q)
    if q < 0:
        raise DomainError(f"sqrt of negative rational {q}")
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        root = Fraction(rn, rd)
        return BoundPair(root, root)
    s = 10 ** k
    lo = Fraction(sqrt_scaled(q, k, up=False), s)
    hi = Fraction(sqrt_scaled(q, k, up=True), s)
    if not (lo * lo <= q <= hi * hi):  # pragma: no cover - internal soundness check
        raise AssertionError(f"sqrt enclosure failed squaring check for {q}")
    return BoundPair(lo, hi)


def arccos_bounds(q: Fraction, k: int) -> BoundPair:
    """Enclosure of arccos(q), q in [0, 1], of width <= 10^-k (radians)."""
    if k < 1:
        raise PrecisionError(f"precision must be >= 1, got {k}")
    q = Fraction(q)
    prec = k + GUARD_DIGITS
    lo, hi = arccos_scaled(q, prec)
    s = 10 ** prec
    pair = BoundPair(Fraction(lo, s), Fraction(hi, s))
    if pair.width > Fraction(1, 10 ** k):  # pragma: no cover - internal soundness check
        raise AssertionError(f"arccos enclosure wider than 10^-{k} for {q}")
    return pair
