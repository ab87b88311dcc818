"""Analytic region classifiers in the (lam, mu) parameter half-plane.

Five overlapping regions I-V carry analytic proofs of the counting
inequality N < (lam^2 - mu^2)/4; the computational region COMP (a triangle
under mu = 22 lam / 25 between lam = 5/2 and lam = 150) contains everything
the regions leave out, which is what the certification sweep covers.  The
classifier decides membership exactly for rational inputs: algebraic
boundaries reduce to rational comparisons after squaring, and boundaries
involving pi are settled against pi enclosures of escalating precision
(never equal for rational input, so the escalation terminates).

S_poly evaluates the quadratic-in-pi expressions whose positivity powers
the flat-cylinder region argument; it returns the exact coefficients of
a*pi^2 + b so the sign can be certified from pi enclosures rather than
floats.  coverage_check is the executable content of the containment
theorem: a grid scan confirming theory + COMP leave no hole, plus the
boundary-ordering constants its proof relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from .exactnum import MAX_PRECISION, PrecisionError, pi_bounds

#: Breakpoints of the flat-cylinder region branches, as inner-radius values.
R_BREAKS = (Fraction(0), Fraction(2, 3), Fraction(4, 5), Fraction(17, 20),
            Fraction(22, 25), Fraction(1))

#: The computational region: 5/2 <= lam <= 150, 0 <= mu <= (22/25) lam.
COMP_LAMBDA_MIN = Fraction(5, 2)
COMP_LAMBDA_MAX = Fraction(150)
COMP_SLOPE = Fraction(22, 25)


class RegionLabel(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    COMP = "COMP"
    NONE = "NONE"


THEORY_LABELS = frozenset({RegionLabel.I, RegionLabel.II, RegionLabel.III,
                           RegionLabel.IV, RegionLabel.V})


def _pi_sign(q: Fraction, power: int = 1, k: int = 12) -> int:
    """Sign of q - pi^power for rational q (never zero); precision escalates
    until the enclosure separates them."""
    while True:
        b = pi_bounds(k)
        lo, hi = b.lo ** power, b.hi ** power
        if q > hi:
            return 1
        if q < lo:
            return -1
        if k >= MAX_PRECISION:
            raise PrecisionError(f"cannot separate {q} from pi^{power} at k={k}")
        k = min(2 * k, MAX_PRECISION)


def _in_region_II(lam: Fraction, mu: Fraction) -> bool:
    if mu <= 0:
        return False
    r = mu / lam
    j = 0
    for idx in range(1, 5):
        if r >= R_BREAKS[idx]:
            j = idx
    # lam < (j+1) pi sqrt(r) / (1-r), squared to clear the root.
    q = lam * lam * (1 - r) ** 2 / ((j + 1) ** 2 * r)
    return _pi_sign(q, power=2) < 0


def classify(lam, mu) -> set[RegionLabel]:
    """Every analytic/computational region containing (lam, mu).

    Inputs are taken exactly (ints, Fractions, or floats via their exact
    binary value); boundary ties are resolved by the regions' strict or
    non-strict inequalities, never by floating-point tolerance.
    """
    lam, mu = Fraction(lam), Fraction(mu)
    if lam <= 0 or mu < 0 or mu >= lam:
        raise ValueError(f"need 0 <= mu < lam with lam > 0, got ({lam}, {mu})")
    labels: set[RegionLabel] = set()
    if mu * mu >= lam * lam - 8:
        labels.add(RegionLabel.I)
    if _in_region_II(lam, mu):
        labels.add(RegionLabel.II)
    if lam > 10 and mu > 0 and mu * mu <= lam / 5 - 2:
        labels.add(RegionLabel.III)
    if lam >= Fraction(578, 45) and Fraction(64, 225) <= mu <= lam / 10 - 1:
        labels.add(RegionLabel.IV)
    if mu > 0 and _pi_sign(lam / 16) > 0:
        # mu^2 - lam mu + 4 pi lam < 0  <=>  pi < (lam mu - mu^2)/(4 lam)
        q = (lam * mu - mu * mu) / (4 * lam)
        if q > 0 and _pi_sign(q) > 0:
            labels.add(RegionLabel.V)
    if in_comp(lam, mu):
        labels.add(RegionLabel.COMP)
    return labels


def in_comp(lam, mu) -> bool:
    """Membership in the computational region (boundary included)."""
    lam, mu = Fraction(lam), Fraction(mu)
    return (COMP_LAMBDA_MIN <= lam <= COMP_LAMBDA_MAX
            and 0 <= mu <= COMP_SLOPE * lam)


# ---------------------------------------------------------------------------
# Boundary curves (floating point; for plot data and the coverage scan).
# ---------------------------------------------------------------------------

def eta_I(r: float) -> float:
    return math.sqrt(8.0 / (1.0 - r * r))


def eta_II(r: float) -> float:
    j = sum(1 for t in R_BREAKS[1:5] if r >= t)
    return (j + 1) * math.pi * math.sqrt(r) / (1.0 - r)


def eta_III_minus(r: float) -> float:
    return (1.0 - math.sqrt(1.0 - 200.0 * r * r)) / (10.0 * r * r)


def eta_III_plus(r: float) -> float:
    return (1.0 + math.sqrt(1.0 - 200.0 * r * r)) / (10.0 * r * r)


def eta_IV(r: float) -> float:
    return max(64.0 / (225.0 * r), 10.0 / (1.0 - 10.0 * r))


def eta_V(r: float) -> float:
    return 4.0 * math.pi / (r * (1.0 - r))


def zeta_I(lam: float) -> float:
    return math.sqrt(lam * lam - 8.0)


def zeta_II(lam: float) -> float:
    """Piecewise boundary below the flat-cylinder region: curve branches
    (inverting lam = i pi sqrt(r)/(1-r)) alternate with linear jumps
    mu = r_i lam at the breakpoint radii."""
    for i in range(1, 6):
        r_lo, r_hi = R_BREAKS[i - 1], R_BREAKS[i]
        curve_lo = i * math.pi * math.sqrt(r_lo) / (1.0 - r_lo) if r_lo < 1 else math.inf
        curve_hi = i * math.pi * math.sqrt(r_hi) / (1.0 - r_hi) if r_hi < 1 else math.inf
        if curve_lo <= lam < curve_hi:
            root = math.sqrt(4.0 * lam * lam + (i * math.pi) ** 2)
            return lam - i * math.pi / (2.0 * lam) * (root - i * math.pi)
        if i <= 4:
            jump_hi = (i + 1) * math.pi * math.sqrt(r_hi) / (1.0 - r_hi)
            if curve_hi <= lam < jump_hi:
                return float(r_hi) * lam
    raise ValueError(f"zeta_II branch lookup failed for lam={lam}")  # pragma: no cover


def zeta_III(lam: float) -> float:
    return math.sqrt(lam / 5.0 - 2.0)


def zeta_IV_minus(lam: float) -> float:
    return 64.0 / 225.0


def zeta_IV_plus(lam: float) -> float:
    return lam / 10.0 - 1.0


def zeta_V_minus(lam: float) -> float:
    return 0.5 * (lam - math.sqrt(lam * (lam - 16.0 * math.pi)))


def zeta_V_plus(lam: float) -> float:
    return 0.5 * (lam + math.sqrt(lam * (lam - 16.0 * math.pi)))


def zeta_comp(lam: float) -> float:
    return float(COMP_SLOPE) * lam


# ---------------------------------------------------------------------------
# Sign-certified quadratic-in-pi expressions.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PiQuadratic:
    """Exact value a * pi^2 + b with rational a, b and a certified sign."""

    a: Fraction
    b: Fraction

    def as_float(self) -> float:
        return float(self.a) * math.pi ** 2 + float(self.b)

    def sign(self, k: int = 12) -> int:
        if self.a == 0:
            return (self.b > 0) - (self.b < 0)
        # a pi^2 + b > 0  <=>  pi^2 > -b/a for a > 0 (reversed for a < 0).
        s = -_pi_sign(-self.b / self.a, power=2, k=k)
        return s if self.a > 0 else -s


def S_poly(j: int, r: Fraction, tau) -> PiQuadratic:
    """S_j(r; tau) = (sum n^2 tau_n) pi^2 r (1+r)^2 - 16 sum(1/tau_n)
    - 4 j (1 - r^2), exactly, for a weight vector tau of length j summing
    to 1 with entries in (0, 1]."""
    if j not in (1, 2, 3, 4):
        raise ValueError(f"j must be 1..4, got {j}")
    tau = [Fraction(t) for t in tau]
    if len(tau) != j:
        raise ValueError(f"tau must have length {j}, got {len(tau)}")
    if any(not 0 < t <= 1 for t in tau) or sum(tau) != 1:
        raise ValueError(f"tau must lie in (0,1]^{j} and sum to 1, got {tau}")
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    a = sum(n * n * t for n, t in enumerate(tau, start=1)) * r * (1 + r) ** 2
    b = -16 * sum(1 / t for t in tau) - 4 * j * (1 - r * r)
    return PiQuadratic(a, b)


# ---------------------------------------------------------------------------
# Coverage scan: theory + COMP leave no hole up to lambda_max.
# ---------------------------------------------------------------------------

@dataclass
class CoverageReport:
    points: int = 0
    exact_rechecks: int = 0
    uncovered: list = field(default_factory=list)
    ordering_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.uncovered and not self.ordering_failures


_SAFE = 1e-6  # float prefilter margin; anything closer goes to the exact path


def _column_robust_cover(lam: float, mu: np.ndarray) -> np.ndarray:
    """Points of a lam column robustly inside some region (float margins)."""
    lam2 = lam * lam
    mu2 = mu * mu
    covered = mu2 - (lam2 - 8.0) >= _SAFE
    r = mu / lam
    j = np.searchsorted([2 / 3, 4 / 5, 17 / 20, 22 / 25], r, side="right")
    near_break = np.min(np.abs(r[:, None] - np.array([2 / 3, 4 / 5, 17 / 20, 22 / 25])),
                        axis=1) < _SAFE
    cond_II = (j + 1) ** 2 * math.pi ** 2 * r - lam2 * (1.0 - r) ** 2 >= _SAFE
    covered |= cond_II & ~near_break
    if lam > 10 + _SAFE:
        covered |= (lam / 5.0 - 2.0) - mu2 >= _SAFE
    if lam >= 578 / 45 + _SAFE:
        covered |= (mu - 64 / 225 >= _SAFE) & ((lam / 10.0 - 1.0) - mu >= _SAFE)
    if lam > 16 * math.pi + _SAFE:
        covered |= (lam * mu - mu2) - 4.0 * math.pi * lam >= _SAFE
    if 2.5 + _SAFE <= lam <= 150.0 - _SAFE:
        covered |= (22.0 / 25.0) * lam - mu >= _SAFE
    return covered


def coverage_check(lambda_max: float = 400.0, step: Fraction = Fraction(1, 4),
                   ordering_samples: int = 500) -> CoverageReport:
    """Scan the grid of the parameter half-plane with the given step up to
    lambda_max; every point must sit in a theory region or in COMP.  A fast
    float prefilter discards robustly covered points and the remainder is
    re-checked with the exact classifier, so boundary ties cannot slip
    through.  Also verifies the boundary orderings that make the picture
    work beyond lam = 150."""
    step = Fraction(step)
    report = CoverageReport()
    n_lam = int(Fraction(lambda_max) / step)
    for i in range(1, n_lam + 1):
        lam = i * step
        n_mu = math.ceil(lam / step) - 1
        if n_mu < 1:
            continue
        mu_f = np.arange(1, n_mu + 1, dtype=float) * float(step)
        report.points += n_mu
        covered = _column_robust_cover(float(lam), mu_f)
        for idx in np.nonzero(~covered)[0]:
            mu = (int(idx) + 1) * step
            report.exact_rechecks += 1
            if not classify(lam, mu) and not in_comp(lam, mu):
                report.uncovered.append((lam, mu))

    # Orderings for lam > 150: IV straddles III, IV reaches above V's lower
    # branch, and V's upper branch clears the COMP slope.
    ordering_grid = (np.linspace(150.0 + 1e-9, float(lambda_max), ordering_samples)
                     if lambda_max > 150.0 else [])
    for lam in ordering_grid:
        checks = [
            ("IV- < III", zeta_IV_minus(lam) < zeta_III(lam)),
            ("III < IV+", zeta_III(lam) < zeta_IV_plus(lam)),
            ("V- < IV+", zeta_V_minus(lam) < zeta_IV_plus(lam)),
            ("comp < V+", zeta_comp(lam) < zeta_V_plus(lam)),
        ]
        for name, ok in checks:
            if not ok:
                report.ordering_failures.append((name, lam))
    return report
