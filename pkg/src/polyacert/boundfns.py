"""Elementary bound functions for the phase-difference estimates.

The four functions bound the (scaled) difference of Bessel phase values and
drive both the analytic region arguments and the certification sweep:

    G_lam(z) = (sqrt(lam^2 - z^2) - z*arccos(z/lam)) / pi   on [0, lam], 0 after
    H_mu(z)  = (3 mu^2 + 2 z^2) / (24 pi (mu^2 - z^2)^(3/2))  on [0, mu)
    F_mu(z)  = max(G_mu(z) - H_mu(z), -1/4)                 on [0, mu), -1/4 after
    Phi_{lam,mu}(z) = G_lam(z) - G_mu(z)

Each is available in plain floating point (for oracles and plots, never for
certification) and in verified modes that return a rational provably below
or above the true value, built from the directed-rounding primitives in
``exactnum``.  The scaled-integer entry points (``g_scaled`` etc.) are what
the floor-sum majorant calls in its inner loop.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import (
    DomainError,
    arccos_scaled,
    ceil_div,
    from_fraction_scaled,
    pi_scaled,
    sqrt_scaled,
)

#: G_lam(lam/2) = OMEGA0 * lam; the constant behind the two-term disk bound.
OMEGA0 = math.sqrt(3.0) / (2.0 * math.pi) - 1.0 / 6.0


@dataclass(frozen=True)
class EvalMode:
    """Evaluation mode: plain float, or a verified one-sided rational bound."""

    direction: str  # "float" | "lower" | "upper"
    precision: int = 12

    def __post_init__(self) -> None:
        if self.direction not in ("float", "lower", "upper"):
            raise ValueError(f"unknown mode {self.direction!r}")
        if self.direction != "float" and self.precision < 2:
            raise ValueError("verified modes need precision >= 2")


FLOAT = EvalMode("float")


def verified_lower(k: int = 12) -> EvalMode:
    return EvalMode("lower", k)


def verified_upper(k: int = 12) -> EvalMode:
    return EvalMode("upper", k)


# ---------------------------------------------------------------------------
# Scaled-integer verified evaluation (value ~ result * 10^prec).
# ---------------------------------------------------------------------------

def _div_by_pi(num: int, prec: int, up: bool) -> int:
    """Directed (num / 10^prec) / pi at scale 10^prec, any sign of num."""
    pi_lo, pi_hi = pi_scaled(prec)
    scale = 10 ** prec
    if up:
        return ceil_div(num * scale, pi_lo if num >= 0 else pi_hi)
    return (num * scale) // (pi_hi if num >= 0 else pi_lo)


def g_scaled(lam: Fraction, z: Fraction, prec: int, up: bool) -> int:
    """Directed G_lam(z) * 10^prec.  Exact 0 for z >= lam."""
    if z >= lam:
        return 0
    sq = lam * lam - z * z
    ac_lo, ac_hi = arccos_scaled(z / lam, prec)
    if up:
        num = sqrt_scaled(sq, prec, up=True) - (ac_lo * z.numerator) // z.denominator
        return _div_by_pi(num, prec, up=True)
    num = sqrt_scaled(sq, prec, up=False) - ceil_div(ac_hi * z.numerator, z.denominator)
    # G >= 0 on [0, lam]; clamping keeps the bound valid when cancellation
    # near z = lam drives the rounded numerator slightly negative.
    return max(_div_by_pi(num, prec, up=False), 0)


def h_scaled(mu: Fraction, z: Fraction, prec: int, up: bool) -> int:
    """Directed H_mu(z) * 10^prec for 0 <= z < mu.

    The upper mode refuses arguments whose rounded (mu^2 - z^2)^(3/2)
    collapses to zero: callers needing H there are inside F's -1/4 branch.
    """
    d = mu * mu - z * z
    if d <= 0:
        raise DomainError(f"H undefined at z={z} >= mu={mu}")
    num = 3 * mu * mu + 2 * z * z
    scale3 = 10 ** (3 * prec)
    pi_lo, pi_hi = pi_scaled(prec)
    if up:
        root = sqrt_scaled(d, prec, up=False)
        d32 = (d.numerator * root) // d.denominator
        if d32 <= 0:
            raise DomainError(f"H upper bound diverges: mu^2 - z^2 = {d} below resolution")
        return ceil_div(num.numerator * scale3, num.denominator * 24 * pi_lo * d32)
    root = sqrt_scaled(d, prec, up=True)
    d32 = ceil_div(d.numerator * root, d.denominator)
    return (num.numerator * scale3) // (num.denominator * 24 * pi_hi * d32)


def f_scaled(mu: Fraction, z: Fraction, prec: int, up: bool) -> int:
    """Directed F_mu(z) * 10^prec; total (the -1/4 branch needs no H)."""
    quarter = -(10 ** prec) // 4
    if z >= mu:
        return quarter
    if up:
        return max(g_scaled(mu, z, prec, up=True) - h_scaled(mu, z, prec, up=False),
                   quarter)
    try:
        h_up = h_scaled(mu, z, prec, up=True)
    except DomainError:
        return quarter  # H blows up, so G - H < -1/4 and the clamp wins
    return max(g_scaled(mu, z, prec, up=False) - h_up, quarter)


def phi_scaled(lam: Fraction, mu: Fraction, z: Fraction, prec: int, up: bool) -> int:
    """Directed Phi_{lam,mu}(z) * 10^prec as a difference of directed G."""
    return g_scaled(lam, z, prec, up) - g_scaled(mu, z, prec, not up)


# ---------------------------------------------------------------------------
# Mode-dispatching public surface.
# ---------------------------------------------------------------------------

def _dispatch(mode: EvalMode, float_fn, scaled_fn):
    if mode.direction == "float":
        return float_fn()
    v = scaled_fn(mode.precision, mode.direction == "upper")
    return Fraction(v, 10 ** mode.precision)


def G(lam, z, mode: EvalMode = FLOAT):
    """G_lam(z); requires lam > 0, z >= 0."""
    if lam <= 0 or z < 0:
        raise DomainError(f"G needs lam > 0, z >= 0; got lam={lam}, z={z}")
    if mode.direction == "float":
        lam, z = float(lam), float(z)
        if z >= lam:
            return 0.0
        return (math.sqrt(lam * lam - z * z) - z * math.acos(z / lam)) / math.pi
    return _dispatch(mode, None,
                     lambda k, up: g_scaled(Fraction(lam), Fraction(z), k, up))


def H(mu, z, mode: EvalMode = FLOAT):
    """H_mu(z); requires 0 <= z < mu (H diverges at z = mu)."""
    if z < 0 or z >= mu:
        raise DomainError(f"H needs 0 <= z < mu; got mu={mu}, z={z}")
    if mode.direction == "float":
        mu, z = float(mu), float(z)
        return (3 * mu * mu + 2 * z * z) / (24 * math.pi * (mu * mu - z * z) ** 1.5)
    return _dispatch(mode, None,
                     lambda k, up: h_scaled(Fraction(mu), Fraction(z), k, up))


def F(mu, z, mode: EvalMode = FLOAT):
    """F_mu(z); total: equals -1/4 for z >= mu."""
    if mu < 0 or z < 0:
        raise DomainError(f"F needs mu >= 0, z >= 0; got mu={mu}, z={z}")
    if mode.direction == "float":
        mu, z = float(mu), float(z)
        if z >= mu:
            return -0.25
        return max(G(mu, z) - H(mu, z), -0.25)
    return _dispatch(mode, None,
                     lambda k, up: f_scaled(Fraction(mu), Fraction(z), k, up))


def Phi(lam, mu, z, mode: EvalMode = FLOAT):
    """Phi_{lam,mu}(z) = G_lam(z) - G_mu(z); requires mu < lam."""
    if not mu < lam:
        raise DomainError(f"Phi needs mu < lam; got lam={lam}, mu={mu}")
    if mode.direction == "float":
        return G(lam, z) - G(mu, z)
    return _dispatch(mode, None,
                     lambda k, up: phi_scaled(Fraction(lam), Fraction(mu), Fraction(z), k, up))


def lipschitz_c(lam, mu) -> float:
    """Lipschitz constant of Phi_{lam,mu} on [0, mu]: arccos(mu/lam) / pi."""
    if not 0 < mu < lam:
        raise DomainError(f"need 0 < mu < lam; got lam={lam}, mu={mu}")
    return math.acos(float(mu) / float(lam)) / math.pi
