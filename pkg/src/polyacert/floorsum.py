"""Trapezoidal floor sums, the lattice-count majorants P and P-bar, and
executable verifiers for the floor-sum comparison theorems.

The trapezoidal floor sum of g on integer interval [a, b],

    T(g, a, b) = floor(g(a))/2 + sum_{m=a+1}^{b-1} floor(g(m)) + floor(g(b))/2,

counts lattice points of Z x N on or under the graph of a non-negative g,
with half weight on the edge columns.  Four comparison theorems bound T by
the integral of g under concavity/convexity and Lipschitz hypotheses; each
is implemented here as a checker that first validates its hypotheses on the
given instance (rejecting, not failing, when they are unmet) and then
asserts the inequality, reporting the margin.

P(lam, mu) = 2 T(G_lam - F_mu, 0, floor(lam) + 1) upper-bounds the annulus
eigenvalue count, and P_bar is its exact-rational majorant built from
directed-rounding evaluations; P_bar is the workhorse of the certification
sweep and is therefore evaluated in scaled-integer arithmetic with the
G row cached per lam.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .boundfns import F, G, f_scaled, g_scaled
from .exactnum import GUARD_DIGITS, rat_floor


class HypothesisViolation(ValueError):
    """The instance fails a theorem's preconditions; the check is rejected."""


@dataclass(frozen=True)
class FloorSumReport:
    """Value of a trapezoidal floor sum plus its term-by-term audit trail."""

    value: Fraction
    terms: tuple  # ((m, floor(g(m))), ...)

    def recompute(self) -> Fraction:
        half = Fraction(self.terms[0][1] + self.terms[-1][1], 2)
        return half + sum(f for _, f in self.terms[1:-1])


def tfs(g: Callable, a: int, b: int) -> FloorSumReport:
    """Trapezoidal floor sum of g on [a, b]; exact for exact-valued g."""
    if not (isinstance(a, int) and isinstance(b, int) and a < b):
        raise ValueError(f"need integers a < b, got a={a}, b={b}")
    terms = tuple((m, math.floor(g(m))) for m in range(a, b + 1))
    value = Fraction(terms[0][1] + terms[-1][1], 2) + sum(f for _, f in terms[1:-1])
    return FloorSumReport(value, terms)


# ---------------------------------------------------------------------------
# Lattice-count majorants.
# ---------------------------------------------------------------------------

def P(lam: float, mu: float) -> int:
    """Float-mode 2 T(G_lam - F_mu, 0, floor(lam)+1).  Oracle quality only:
    upper-bounds the annulus count in exact arithmetic, but this evaluation
    carries no error control and must never feed a certificate."""
    if not 0 <= mu < lam:
        raise ValueError(f"need 0 <= mu < lam, got lam={lam}, mu={mu}")
    lam, mu = float(lam), float(mu)
    n3 = math.floor(lam) + 1
    report = tfs(lambda m: G(lam, m) - F(mu, m), 0, n3)
    return int(2 * report.value)


@lru_cache(maxsize=512)
def _g_row_upper(lam: Fraction, n3: int, prec: int) -> tuple:
    """Directed-upper G_lam at z = 0..n3, scaled by 10^prec; cached because
    the sweep evaluates many mu against one lam per vertical strip."""
    return tuple(g_scaled(lam, Fraction(m), prec, up=True) for m in range(n3 + 1))


@lru_cache(maxsize=16384)
def _f_row_lower(mu: Fraction, prec: int) -> tuple:
    """Directed-lower F_mu at the integers below mu (F is the constant -1/4
    from mu on, so the row does not depend on lam); cached so certificate
    verification reuses the sweep's anchors at no cost."""
    return tuple(f_scaled(mu, Fraction(m), prec, up=False)
                 for m in range(math.ceil(mu)))


def P_bar_report(lam: Fraction, mu: Fraction, k: int = 12) -> FloorSumReport:
    """Floor-sum report behind P_bar (terms are exact rationals scaled back)."""
    lam, mu = Fraction(lam), Fraction(mu)
    if not 0 <= mu < lam:
        raise ValueError(f"need 0 <= mu < lam, got lam={lam}, mu={mu}")
    prec = k + GUARD_DIGITS
    scale = 10 ** prec
    quarter = -(scale // 4)
    n3 = rat_floor(lam) + 1
    g_row = _g_row_upper(lam, n3, prec)
    f_row = _f_row_lower(mu, prec)

    def sample(m: int) -> Fraction:
        f_lo = f_row[m] if m < len(f_row) else quarter
        return Fraction(g_row[m] - f_lo, scale)

    return tfs(sample, 0, n3)


def P_bar(lam: Fraction, mu: Fraction, k: int = 12) -> int:
    """Exact-rational majorant 2 T(G-bar_lam - F-underbar_mu, 0, floor(lam)+1).

    Every term pairs the directed-upper G with the directed-lower F, so the
    result provably dominates P(lam, mu) and with it the true eigenvalue
    count.  The value 2T is always an integer.
    """
    doubled = 2 * P_bar_report(lam, mu, k).value
    assert doubled.denominator == 1
    return int(doubled)


# ---------------------------------------------------------------------------
# Exact piecewise-linear instances (integer knots) and smooth wrappers.
# ---------------------------------------------------------------------------

class PiecewiseLinear:
    """Piecewise-linear function with knots at consecutive integers a..b and
    exact rational values; evaluation and integral are exact."""

    def __init__(self, a: int, values):
        if len(values) < 2:
            raise ValueError("need at least two knot values")
        self.a = a
        self.values = [Fraction(v) for v in values]

    @property
    def b(self) -> int:
        return self.a + len(self.values) - 1

    def eval(self, z):
        z = Fraction(z)
        if not self.a <= z <= self.b:
            raise ValueError(f"{z} outside [{self.a}, {self.b}]")
        i = min(rat_floor(z) - self.a, len(self.values) - 2)
        t = z - (self.a + i)
        return self.values[i] + t * (self.values[i + 1] - self.values[i])

    __call__ = eval

    def slopes(self) -> list[Fraction]:
        return [v1 - v0 for v0, v1 in zip(self.values, self.values[1:])]

    def integral(self, lo: int, hi: int) -> Fraction:
        if not (self.a <= lo < hi <= self.b):
            raise ValueError("integral bounds outside knot range")
        vs = self.values[lo - self.a:hi - self.a + 1]
        return sum((v0 + v1) / 2 for v0, v1 in zip(vs, vs[1:]))

    def shifted(self, c) -> "PiecewiseLinear":
        c = Fraction(c)
        return PiecewiseLinear(self.a, [v + c for v in self.values])


class SmoothCurve:
    """Float-evaluated curve with adaptive-quadrature integral, used to run
    the floor-sum checks against the package's own bound functions."""

    def __init__(self, fn: Callable[[float], float], name: str = ""):
        self.fn = fn
        self.name = name

    def eval(self, z):
        return self.fn(float(z))

    __call__ = eval

    def integral(self, lo, hi) -> float:
        from scipy.integrate import quad

        val, err = quad(self.fn, lo, hi, epsabs=1e-12, epsrel=1e-11, limit=400)
        if err > 1e-8:  # pragma: no cover
            raise ArithmeticError(f"quadrature did not converge on [{lo}, {hi}]")
        return val


def _grid_slopes(g, a: int, b: int, step: Fraction):
    """(slope, midpoint) samples of g over [a, b]; exact for PiecewiseLinear."""
    if isinstance(g, PiecewiseLinear):
        return [(s, None) for s in g.slopes()[a - g.a:b - g.a]]
    n = int(round((b - a) / step))
    xs = [a + i * step for i in range(n + 1)]
    vals = [g.eval(float(x)) for x in xs]
    return [((v1 - v0) / float(step), None) for v0, v1 in zip(vals, vals[1:])]


_FD_TOL = 1e-9  # finite-difference slack for float-evaluated instances


def _require(cond: bool, what: str):
    if not cond:
        raise HypothesisViolation(what)


def _validate_shape(g, a, b, *, decreasing=False, concave=False, convex=False,
                    lipschitz=None, step=Fraction(1, 8)):
    exact = isinstance(g, PiecewiseLinear)
    tol = 0 if exact else _FD_TOL
    slopes = [s for s, _ in _grid_slopes(g, a, b, step)]
    if decreasing:
        _require(all(s <= tol for s in slopes), "not decreasing")
    if concave:
        _require(all(s1 <= s0 + tol for s0, s1 in zip(slopes, slopes[1:])),
                 "not concave")
    if convex:
        _require(all(s1 >= s0 - tol for s0, s1 in zip(slopes, slopes[1:])),
                 "not convex")
    if lipschitz is not None:
        _require(all(abs(s) <= lipschitz + tol for s in slopes),
                 f"not Lipschitz with constant {lipschitz}")


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one floor-sum theorem check."""

    ok: bool
    floor_sum: Fraction
    bound: object          # right-hand side the theorem asserts
    margin: object         # bound - floor_sum (>= 0 when ok)
    is_equality: bool = False


def _result(t_value: Fraction, bound) -> CheckResult:
    return CheckResult(ok=t_value <= bound, floor_sum=t_value, bound=bound,
                       margin=bound - t_value, is_equality=t_value == bound)


def check_concave(g, a: int, b: int) -> CheckResult:
    """Concave g: T(g, a, b) <= integral of g over [a, b]."""
    _validate_shape(g, a, b, concave=True)
    return _result(tfs(g, a, b).value, g.integral(a, b))


def check_t25(g, a: int, b: int, c, drop_at: int | None = None) -> CheckResult:
    """Decreasing concave Lip_c g (0 < c < 1) whose floor drops right after
    ``drop_at`` (default a): T(g, a, b) <= integral - (1-c)(b - drop_at)/2.

    With drop_at == a this is the sharpened concave bound; with an interior
    drop point it is the split variant obtained by additivity.
    """
    c = Fraction(c) if isinstance(g, PiecewiseLinear) else float(c)
    _require(0 < c < 1, "Lipschitz constant must lie in (0, 1)")
    p = a if drop_at is None else drop_at
    _require(a <= p < b, "drop point must lie in [a, b)")
    _validate_shape(g, a, b, decreasing=True, concave=True, lipschitz=c)
    _require(math.floor(g.eval(a)) == math.floor(g.eval(p)), "floor not constant up to drop point")
    _require(math.floor(g.eval(p)) > math.floor(g.eval(p + 1)), "floor does not drop")
    bound = g.integral(a, b) - (1 - c) * (b - p) / 2
    return _result(tfs(g, a, b).value, bound)


def check_convex(g, a: int, b: int) -> CheckResult:
    """Non-negative decreasing convex Lip_1/2 g with integer g(b):
    T(g + 1/4, a, b) <= integral of g.  Equality forces a constant g."""
    half = Fraction(1, 2)
    _validate_shape(g, a, b, decreasing=True, convex=True, lipschitz=half)
    exact = isinstance(g, PiecewiseLinear)
    gb = g.eval(b)
    _require(g.eval(b) >= 0, "not non-negative")
    _require(gb == math.floor(gb) if exact else abs(gb - round(gb)) < _FD_TOL,
             "g(b) not an integer")
    quarter = Fraction(1, 4) if exact else 0.25
    return _result(tfs(lambda m: g.eval(m) + quarter, a, b).value, g.integral(a, b))


def check_convex_improved(g, a: int, b: int, t) -> CheckResult:
    """check_convex hypotheses with g(b) = 0 plus Lip_1/3 on [t, b]:
    T(g + 1/4, a, b) <= integral of g - floor(g(t))/4."""
    exact = isinstance(g, PiecewiseLinear)
    _require(a <= t <= b, "t outside [a, b]")
    _validate_shape(g, a, b, decreasing=True, convex=True, lipschitz=Fraction(1, 2))
    tt = math.ceil(t) if not isinstance(t, int) else t
    if tt < b:
        _validate_shape(g, tt, b, lipschitz=Fraction(1, 3))
    gb = g.eval(b)
    _require(gb == 0 if exact else abs(gb) < _FD_TOL, "g(b) != 0")
    quarter = Fraction(1, 4) if exact else 0.25
    bound = g.integral(a, b) - Fraction(math.floor(g.eval(t)), 4)
    return _result(tfs(lambda m: g.eval(m) + quarter, a, b).value, bound)


def lattice_count_brute(g, a: int, b: int) -> Fraction:
    """Count of (m, n) in Z x N with a <= m <= b and 1 <= n <= g(m), edge
    columns weighted 1/2 — the definition T encodes, by direct enumeration."""
    total = Fraction(0)
    for m in range(a, b + 1):
        gm = g(m)
        count = 0
        n = 1
        while n <= gm:
            count += 1
            n += 1
        total += count * (Fraction(1, 2) if m in (a, b) else 1)
    return total


# ---------------------------------------------------------------------------
# Random instance generators for the theorem property suites.  All produce
# exact PiecewiseLinear data satisfying the respective hypotheses, so a
# reported inequality violation would be a genuine counterexample.
# ---------------------------------------------------------------------------

_DEN = 1000  # slope/value granularity used by the generators


def _frac(rng, lo_thousandths: int, hi_thousandths: int) -> Fraction:
    return Fraction(rng.randint(lo_thousandths, hi_thousandths), _DEN)


def random_concave_instance(rng):
    """Concave PL on a random integer interval (any trend)."""
    a = rng.randint(-5, 5)
    width = rng.randint(1, 25)
    slopes = sorted((_frac(rng, -3000, 3000) for _ in range(width)), reverse=True)
    values = [_frac(rng, -5000, 5000)]
    for s in slopes:
        values.append(values[-1] + s)
    return PiecewiseLinear(a, values), a, a + width


def random_t25_instance(rng, *, interior_drop=False):
    """Decreasing concave Lip_c instance with its floor drop engineered right
    after the drop point; returns (pl, a, b, c, drop_at)."""
    c = Fraction(rng.randint(40, 990), _DEN)
    k1 = rng.randint(1, 6) if interior_drop else 0
    k2 = rng.randint(1, 20)
    a = rng.randint(-4, 4)
    p = a + k1
    b = p + k2
    # Post-drop magnitudes in (eps, c], increasing left to right (concavity);
    # eps below the first magnitude guarantees floor(g(p+1)) < floor(g(p)).
    mags2 = sorted(Fraction(rng.randint(2, int(c * _DEN)), _DEN) for _ in range(k2))
    eps = mags2[0] * Fraction(rng.randint(1, 8), 10)
    level = rng.randint(-3, 3)
    values = [Fraction(level) + eps]
    if k1:
        # Pre-drop magnitudes: strictly positive, at most the first post-drop
        # magnitude, and summing below 1 - eps so the floor stays at `level`.
        cap = min(mags2[0], (1 - eps) / k1)
        cap_th = max(int(cap * _DEN) - 1, 1)
        mags1 = sorted(Fraction(rng.randint(1, cap_th), _DEN) for _ in range(k1))
        head = [values[0]]
        for m in reversed(mags1):
            head.append(head[-1] + m)
        values = list(reversed(head))
    for m in mags2:
        values.append(values[-1] - m)
    return PiecewiseLinear(a, values), a, b, c, p


def random_convex_instance(rng):
    """Non-negative decreasing convex Lip_1/2 PL with integer g(b)."""
    a = rng.randint(-5, 5)
    width = rng.randint(1, 25)
    constant = rng.random() < 0.05  # keep the equality case in the mix
    top = 0 if constant else 500
    mags = sorted((Fraction(rng.randint(0, top), _DEN) for _ in range(width)),
                  reverse=True)
    values = [Fraction(rng.randint(0, 3))]
    for m in reversed(mags):  # build right to left, so magnitudes ascend here
        values.append(values[-1] + m)
    values.reverse()
    return PiecewiseLinear(a, values), a, a + width


def random_convex_improved_instance(rng):
    """Decreasing convex Lip_1/2 PL, Lip_1/3 past t, g(b) = 0; returns
    (pl, a, b, t)."""
    a = rng.randint(-5, 5)
    k_right = rng.randint(1, 15)
    k_left = rng.randint(0, 8)
    t = a + k_left
    b = t + k_right
    mags_right = sorted((Fraction(rng.randint(0, 333), _DEN) for _ in range(k_right)),
                        reverse=True)
    lo = int(mags_right[0] * _DEN)
    mags_left = sorted((Fraction(rng.randint(lo, 500), _DEN) for _ in range(k_left)),
                       reverse=True)
    values = [Fraction(0)]
    for m in reversed(mags_right):
        values.append(values[-1] + m)
    for m in reversed(mags_left):
        values.append(values[-1] + m)
    values.reverse()
    return PiecewiseLinear(a, values), a, b, t
