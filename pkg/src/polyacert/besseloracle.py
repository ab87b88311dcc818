"""Floating-point ground truth: Bessel phase functions and eigenvalue counts.

The phase function theta_nu is the continuous argument of J_nu + i*Y_nu
normalised to -pi/2 at 0+; it increases strictly and passes (k - 1/2) pi
exactly at the k-th positive zero of J_nu.  The phase difference

    Theta_{r,m}(x) = theta_m(x) - theta_m(r x)

crosses multiples of pi exactly at the zeros of the cross-product
L_{r,m}(x) = J_m(x) Y_m(rx) - Y_m(x) J_m(rx), whose squares are the
Dirichlet eigenvalues of the annulus with radii (r, 1).  Counting functions
for the annulus, the disk, and the flat cylinder follow.

Everything here is double precision with no error control: it serves as an
independent oracle for the certified machinery, never as part of a
certificate.  theta is reconstructed from the principal angle atan2(Y, J)
plus pi times the number of J zeros passed — exact up to the branch, with
no accumulated quadrature error; an ODE integration of
theta' = 2 / (pi x M^2) is kept as a low-order cross-check.
"""

from __future__ import annotations

import bisect
import math

import numpy as np
from scipy import special

from .exactnum import DomainError

_KAPPA_0 = 1  # multiplicity of the m = 0 angular mode; 2 for every m > 0

#: Comparison resolution for oracle-based inequality checks.  Deep in the
#: evanescent regime (x far below the order) theta saturates at -pi/2 in
#: double precision although the true value sits above it by less than one
#: ulp; strict inequalities involving oracle values are therefore only
#: meaningful up to this slack.
ORACLE_EPS = 1e-9


# ---------------------------------------------------------------------------
# Zeros of J_nu, cached per order.
# ---------------------------------------------------------------------------

_int_zero_cache: dict[int, np.ndarray] = {}
_real_zero_cache: dict[float, tuple[float, np.ndarray]] = {}


def _jzeros_integer(m: int, x: float) -> np.ndarray:
    """All positive zeros of J_m up to at least x (integer m >= 0)."""
    zeros = _int_zero_cache.get(m)
    # McMahon: j_{m,k} ~ (k + m/2 - 1/4) pi, so this count overshoots a bit.
    need = max(1, int(x / math.pi - m / 2 + 4))
    if zeros is None or (len(zeros) < need and zeros[-1] <= x):
        nt = need
        zeros = special.jn_zeros(m, nt)
        while zeros[-1] <= x:
            nt *= 2
            zeros = special.jn_zeros(m, nt)
        _int_zero_cache[m] = zeros
    return zeros


def _jzeros_real(nu: float, x: float) -> np.ndarray:
    """Zeros of J_nu up to x for non-integer order, by sign scan + refinement.

    Consecutive zeros of J_nu are separated by more than 2.9 for every
    nu >= 0, so a unit scan step cannot skip a sign change; all zeros
    exceed nu, so the scan starts there.
    """
    from scipy.optimize import brentq

    cached = _real_zero_cache.get(nu)
    if cached is not None and cached[0] >= x:
        hi = cached[0]
        zeros = cached[1]
        return zeros[zeros <= x]
    hi = max(x * 1.25, nu + 10.0)
    grid = np.arange(max(nu, 1e-9), hi + 1.0, 1.0)
    vals = special.jv(nu, grid)
    zeros = []
    for lo_x, hi_x, lo_v, hi_v in zip(grid, grid[1:], vals, vals[1:]):
        if lo_v == 0.0:
            zeros.append(float(lo_x))
        elif lo_v * hi_v < 0:
            zeros.append(brentq(lambda s: special.jv(nu, s), lo_x, hi_x, xtol=1e-12))
    arr = np.asarray(zeros)
    _real_zero_cache[nu] = (hi, arr)
    return arr[arr <= x]


def _count_jzeros(nu: float, x: float) -> int:
    """Number of positive zeros of J_nu in (0, x]."""
    if x <= nu:  # j_{nu,1} > nu, so nothing to count yet
        return 0
    if float(nu).is_integer():
        zeros = _jzeros_integer(int(nu), x)
        return bisect.bisect_right(zeros.tolist(), x)
    return int(len(_jzeros_real(float(nu), x)))


# ---------------------------------------------------------------------------
# Phase functions.
# ---------------------------------------------------------------------------

def theta(nu: float, x: float) -> float:
    """Continuous Bessel phase with theta_nu(0+) = -pi/2.

    Principal angle of (J_nu, Y_nu) lifted by pi per zero of J_nu passed;
    between consecutive J zeros the lifted angle stays within (-pi/2, pi/2),
    which fixes the branch with no integration.
    """
    if x <= 0:
        raise DomainError(f"theta needs x > 0, got {x}")
    if nu < 0:
        raise DomainError(f"theta needs nu >= 0, got {nu}")
    z = _count_jzeros(nu, x)
    j, y = special.jv(nu, x), special.yv(nu, x)
    sign = -1.0 if z % 2 else 1.0
    return z * math.pi + math.atan2(sign * y, sign * j)


def theta_via_ode(nu: float, x: float, x0: float = 0.05) -> float:
    """Cross-check route: integrate theta' = 2/(pi t M_nu(t)^2) from x0.

    Only dependable at modest order (the seed value at x0 assumes no zeros
    of J_nu below x0); used by tests to corroborate `theta`.
    """
    from scipy.integrate import solve_ivp

    if x <= x0:
        raise DomainError(f"need x > x0 = {x0}")

    def rhs(t, _y):
        m2 = special.jv(nu, t) ** 2 + special.yv(nu, t) ** 2
        return 2.0 / (math.pi * t * m2)

    seed = math.atan2(special.yv(nu, x0), special.jv(nu, x0))
    sol = solve_ivp(rhs, (x0, x), [seed], rtol=1e-10, atol=1e-12, method="RK45")
    return float(sol.y[0, -1])


def Theta(r: float, m: float, lam: float) -> float:
    """Phase difference Theta_{r,m}(lam) = theta_m(lam) - theta_m(r lam)."""
    if not 0 < r < 1:
        raise DomainError(f"need 0 < r < 1, got {r}")
    return theta(m, lam) - theta(m, r * lam)


def gamma(lam: float, mu: float, z: float) -> float:
    """gamma_{lam,mu}(z) = (theta_z(lam) - theta_z(mu)) / pi, with the mu = 0
    axis taken as theta_z(0+) = -pi/2."""
    base = -math.pi / 2 if mu == 0 else theta(z, mu)
    return (theta(z, lam) - base) / math.pi


# ---------------------------------------------------------------------------
# Counting functions.
# ---------------------------------------------------------------------------

def count_annulus(r: float, lam: float) -> int:
    """Dirichlet eigenvalue count of the (r, 1) annulus at lam^2: the sum of
    kappa_m * floor(Theta_{r,m}(lam)/pi) over m = 0..floor(lam); orders above
    floor(lam) contribute nothing since their first cross-product zero
    exceeds the order."""
    if not 0 < r < 1:
        raise DomainError(f"need 0 < r < 1, got {r}")
    if lam <= 0:
        raise DomainError(f"need lam > 0, got {lam}")
    total = 0
    for m in range(math.floor(lam) + 1):
        total += (_KAPPA_0 if m == 0 else 2) * math.floor(Theta(r, m, lam) / math.pi)
    return total


def crossproduct(r: float, m: int, x) -> np.ndarray:
    """L_{r,m}(x) = J_m(x) Y_m(rx) - Y_m(x) J_m(rx), vectorised in x."""
    x = np.asarray(x, dtype=float)
    return (special.jv(m, x) * special.yv(m, r * x)
            - special.yv(m, x) * special.jv(m, r * x))


def count_zeros_crossproduct(r: float, m: int, lam: float) -> int:
    """Zeros of L_{r,m} in (0, lam] by adaptive sign scan, independent of the
    phase route (the dual-method consistency check)."""
    if not 0 < r < 1:
        raise DomainError(f"need 0 < r < 1, got {r}")
    if lam <= 0:
        raise DomainError(f"need lam > 0, got {lam}")
    # No zeros at or below the order; start the scan there.
    start = max(float(m), 1e-6)
    if lam <= start:
        return 0
    step = min(0.5, (1.0 - r) / 4.0)
    grid = np.arange(start, lam + step, step)
    grid[-1] = lam
    vals = crossproduct(r, m, grid)
    # 0 * inf from simultaneous under/overflow at large order: nudge and retry.
    bad = ~np.isfinite(vals) & ~np.isinf(vals)
    if bad.any():
        vals[bad] = crossproduct(r, m, grid[bad] + step / 7)
    signs = np.sign(vals)
    count = int(np.sum(signs[:-1] * signs[1:] < 0))
    count += int(np.sum(signs[1:] == 0))  # grid point landing on a zero
    return count


def count_disk(lam: float) -> int:
    """Dirichlet eigenvalue count of the unit disk at lam^2, from zeros of
    the integer-order J_m."""
    if lam <= 0:
        raise DomainError(f"need lam > 0, got {lam}")
    total = 0
    for m in range(math.floor(lam) + 1):
        zeros = _jzeros_integer(m, lam)
        k = bisect.bisect_right(zeros.tolist(), lam)
        if k == 0 and m > 0:
            break  # j_{m,1} increases with m, so no larger order contributes
        total += (_KAPPA_0 if m == 0 else 2) * k
    return total


def count_cylinder(h: float, lam: float) -> int:
    """Dirichlet count of the flat cylinder (0, h) x S^1 at lam^2:
    #{(n, m) in N x Z : m^2 + pi^2 n^2 / h^2 <= lam^2} by enumeration."""
    if h <= 0 or lam <= 0:
        raise DomainError(f"need h > 0 and lam > 0, got h={h}, lam={lam}")
    total = 0
    for n in range(1, math.floor(h * lam / math.pi) + 1):
        rest = lam * lam - (math.pi * n / h) ** 2
        if rest < 0:
            break
        total += 1 + 2 * math.floor(math.sqrt(rest))
    return total


def cylinder_h(r: float) -> float:
    """Cylinder height h_r = (1 - r)/sqrt(r) that dominates the annulus count."""
    if not 0 < r < 1:
        raise DomainError(f"need 0 < r < 1, got {r}")
    return (1.0 - r) / math.sqrt(r)
