"""Floor sums, the P/P_bar majorants, and the comparison-theorem checkers."""

import math
import random
from fractions import Fraction as Q

import pytest

from polyacert import besseloracle as oracle
from polyacert import boundfns as bf
from polyacert import floorsum as fs


def test_tfs_examples():
    assert fs.tfs(lambda m: 2.5, 0, 4).value == 8
    assert fs.tfs(lambda m: m, 0, 3).value == Q(9, 2)
    assert fs.tfs(lambda m: Q(-m, 2) + 1, 0, 4).value == -1
    with pytest.raises(ValueError):
        fs.tfs(lambda m: m, 3, 3)
    with pytest.raises(ValueError):
        fs.tfs(lambda m: m, 4, 2)


def test_tfs_report_recompute():
    rep = fs.tfs(lambda m: Q(m * m, 3), -2, 5)
    assert rep.recompute() == rep.value
    assert rep.terms[0] == (-2, 1) and rep.terms[-1] == (5, 8)


def test_tfs_additivity():
    rng = random.Random(17)
    for _ in range(500):
        pl, a, b = fs.random_concave_instance(rng)
        if b - a < 2:
            continue
        p = rng.randint(a + 1, b - 1)
        assert fs.tfs(pl, a, b).value == fs.tfs(pl, a, p).value + fs.tfs(pl, p, b).value


def test_lattice_count_equivalence():
    rng = random.Random(23)
    for _ in range(200):
        pl, a, b = fs.random_convex_instance(rng)  # non-negative by construction
        assert fs.tfs(pl, a, b).value == fs.lattice_count_brute(pl, a, b)


def test_P_small_hand_case():
    # lam=1, mu=0.5: three terms, all with floor zero.
    assert fs.P(1.0, 0.5) == 0
    assert fs.P_bar(Q(1), Q(1, 2)) == 0


def test_P_dominates_oracle_spotgrid():
    for r in (0.2, 0.5, 0.8):
        for q in range(2, 30):
            lam = q * 1.25
            assert oracle.count_annulus(r, lam) <= fs.P(lam, r * lam)


def test_P_at_sweep_seed():
    p = fs.P(150.0, 0.0)
    assert p < 5625  # the margin that seeds the first rectangle
    assert fs.P_bar(Q(150), Q(0)) == p


def test_P_bar_hand_case():
    # floors of G-bar_{5/2} + 1/4 at m = 0..3 are 1, 0, 0, 0.
    assert fs.P_bar(Q(5, 2), Q(0), 12) == 1
    rep = fs.P_bar_report(Q(5, 2), Q(0), 12)
    assert [f for _, f in rep.terms] == [1, 0, 0, 0]


def test_P_bar_dominates_P_random():
    rng = random.Random(415)
    for _ in range(300):
        lam = Q(rng.randint(30, 4000), 100)
        mu = Q(rng.randint(0, int(lam * 100) - 1), 100)
        assert fs.P_bar(lam, mu, 8) >= fs.P(float(lam), float(mu))


def test_P_bar_monotone_chains():
    lams = [Q(20) + Q(i, 7) for i in range(12)]
    vals = [fs.P_bar(l, Q(5)) for l in lams]
    assert all(v1 >= v0 for v0, v1 in zip(vals, vals[1:]))
    mus = [Q(i, 3) for i in range(20)]
    vals = [fs.P_bar(Q(25), m) for m in mus]
    assert all(v1 <= v0 for v0, v1 in zip(vals, vals[1:]))


def test_N_as_floor_sum_identity():
    # N_r(lam) = 2 T(gamma, 0, floor(lam)+1) with gamma from the oracle.
    for r in (0.3, 0.62):
        for lam in (4.7, 11.2, 29.9):
            mu = r * lam
            rep = fs.tfs(lambda m: oracle.gamma(lam, mu, m), 0, math.floor(lam) + 1)
            assert oracle.count_annulus(r, lam) == 2 * rep.value


def test_majorant_chain():
    for r in (0.25, 0.55, 0.85):
        for lam in (6.0, 18.25, 33.5):
            mu = r * lam
            n = oracle.count_annulus(r, lam)
            p = fs.P(lam, mu)
            pbar = fs.P_bar(Q(lam), Q(r) * Q(lam))
            assert n <= p <= pbar


# ---------------------------------------------------------------------------
# Theorem checkers.
# ---------------------------------------------------------------------------

def test_check_concave_zero_function():
    pl = fs.PiecewiseLinear(0, [Q(0)] * 6)
    res = fs.check_concave(pl, 0, 5)
    assert res.ok and res.margin == 0


def test_check_concave_smooth_phi():
    curve = fs.SmoothCurve(lambda z: bf.Phi(20.0, 10.0, z) + 0.25)
    res = fs.check_concave(curve, 0, 10)
    assert res.ok and res.margin > 0


def test_check_concave_rejects_convex_input():
    pl = fs.PiecewiseLinear(0, [Q(4), Q(2), Q(1), Q(1, 2)])  # strictly convex
    with pytest.raises(fs.HypothesisViolation):
        fs.check_concave(pl, 0, 3)


def test_check_t25_engineered_line():
    # g(z) = -c z + n + eps drops its floor immediately; exact slack.
    c, eps = Q(2, 5), Q(1, 10)
    values = [5 + eps - c * i for i in range(7)]
    pl = fs.PiecewiseLinear(0, values)
    res = fs.check_t25(pl, 0, 6, c)
    assert res.ok
    integral = pl.integral(0, 6)
    assert res.bound == integral - (1 - c) * 6 / 2
    assert res.margin == res.bound - res.floor_sum


def test_check_t25_near_unit_lipschitz_degenerates_to_concave_bound():
    c = Q(999, 1000)
    values = [Q(3) + Q(1, 100) - c * i for i in range(5)]
    pl = fs.PiecewiseLinear(0, values)
    res = fs.check_t25(pl, 0, 4, c)
    assert res.ok
    assert res.bound >= pl.integral(0, 4) - Q(1, 500)  # correction term ~ 0


def test_check_t25_split_variant():
    rng = random.Random(8)
    for _ in range(200):
        pl, a, b, c, p = fs.random_t25_instance(rng, interior_drop=True)
        res = fs.check_t25(pl, a, b, c, drop_at=p)
        assert res.ok
        assert res.bound == pl.integral(a, b) - (1 - c) * (b - p) / 2


def test_check_t25_rejects_missing_drop():
    pl = fs.PiecewiseLinear(0, [Q(1, 2) - Q(i, 100) for i in range(5)])
    with pytest.raises(fs.HypothesisViolation):
        fs.check_t25(pl, 0, 4, Q(1, 2))
    with pytest.raises(fs.HypothesisViolation):  # c outside (0, 1)
        fs.check_t25(pl, 0, 4, Q(3, 2))


def test_check_convex_constant_equality():
    pl = fs.PiecewiseLinear(0, [Q(3)] * 5)
    res = fs.check_convex(pl, 0, 4)
    assert res.ok and res.is_equality
    assert res.floor_sum == 12 == res.bound


def test_check_convex_on_G():
    for lam in (7.3, 23.1):
        curve = fs.SmoothCurve(lambda z, lam=lam: bf.G(lam, z))
        res = fs.check_convex(curve, 0, math.floor(lam) + 1)
        assert res.ok and res.margin > 0


def test_check_convex_rejects_steep_input():
    pl = fs.PiecewiseLinear(0, [Q(4), Q(3), Q(2), Q(1)])  # slope -1 > 1/2
    with pytest.raises(fs.HypothesisViolation):
        fs.check_convex(pl, 0, 3)


def test_check_convex_improved_on_G_gives_disk_bound():
    # With t = lam/2 the improved bound is the two-term disk inequality:
    # 2 T(G + 1/4, 0, floor(lam)+1) <= lam^2/4 - 2 floor(omega0 lam)/4.
    for lam in (7.3, 23.1, 41.0):
        n3 = math.floor(lam) + 1
        curve = fs.SmoothCurve(lambda z, lam=lam: bf.G(lam, z))
        res = fs.check_convex_improved(curve, 0, n3, lam / 2)
        assert res.ok
        t2 = 2 * fs.tfs(lambda m: bf.G(lam, m) + 0.25, 0, n3).value
        assert t2 <= lam * lam / 4 - 2 * math.floor(bf.OMEGA0 * lam) / 4


def test_check_convex_improved_zero_floor_matches_plain():
    rng = random.Random(77)
    for _ in range(100):
        pl, a, b, t = fs.random_convex_improved_instance(rng)
        if math.floor(pl.eval(t)) != 0:
            continue
        improved = fs.check_convex_improved(pl, a, b, t)
        plain = fs.check_convex(pl, a, b)
        assert improved.bound == plain.bound


def test_property_suites_no_violations():
    rng = random.Random(1234)
    for _ in range(1500):
        assert fs.check_concave(*fs.random_concave_instance(rng)).ok
        pl, a, b, c, p = fs.random_t25_instance(rng, interior_drop=rng.random() < 0.5)
        assert fs.check_t25(pl, a, b, c, drop_at=p).ok
        assert fs.check_convex(*fs.random_convex_instance(rng)).ok
        assert fs.check_convex_improved(*fs.random_convex_improved_instance(rng)).ok
