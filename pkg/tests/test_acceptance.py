"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one PASS line on success (run with ``pytest -s`` to see
them); a failure surfaces through the assertion itself.  Criterion 1 runs
the full default certification sweep once per session and re-verifies the
resulting certificate from scratch, so this module takes a couple of
minutes of CPU.
"""

import math
import random
from fractions import Fraction as Q

import pytest

from polyacert import besseloracle as oracle
from polyacert import boundfns as bf
from polyacert import certifier as ct
from polyacert import floorsum as fs
from polyacert import regions as rg


def report(num: int, text: str) -> None:
    print(f"PASS criterion {num}: {text}")


@pytest.fixture(scope="module")
def full_run():
    cert = ct.run_cover(ct.SweepConfig())
    verdict = ct.verify_certificate(cert)
    return cert, verdict


def test_criterion_1_end_to_end_certification(full_run):
    cert, verdict = full_run
    assert cert.status == "complete"
    assert cert.error is None  # zero margin/progress errors
    assert cert.stats["final_lambda"] <= Q(5, 2)
    k = cert.stats["columns"]
    evals = cert.stats["evaluations"]
    assert 100 <= k <= 700
    assert 3_000 <= evals <= 40_000
    assert cert.stats["wall_seconds"] <= 1800
    assert verdict.ok, verdict.failures
    report(1, f"certify complete ({k} columns, {evals} evaluations, "
              f"final lambda = {cert.stats['final_lambda']} "
              f"~ {float(cert.stats['final_lambda']):.6f}, "
              f"{cert.stats['wall_seconds']:.0f}s) and verify passes "
              f"({verdict.rectangles} rectangles, {verdict.triangles} triangles)")


def test_criterion_2_S_values_and_signs():
    cases = [
        (1, Q(2, 3), (Q(1),), 0.0548),
        (2, Q(4, 5), (Q(3, 8), Q(5, 8)), 2.4016),
        (3, Q(17, 20), (Q(1, 4), Q(1, 4), Q(1, 2)), 1.7635),
        (4, Q(22, 25), (Q(1, 6), Q(1, 6), Q(1, 5), Q(7, 15)), 0.1459),
    ]
    for j, r, tau, ref in cases:
        s = rg.S_poly(j, r, tau)
        assert abs(s.as_float() - ref) <= 1e-3
        assert s.sign() == 1  # certified via pi enclosures
    report(2, "all four S_j values within 1e-3, signs certified positive")


def test_criterion_3_ordering_constants():
    ratio = rg.zeta_IV_plus(150.0) / rg.zeta_V_minus(150.0)
    assert abs(ratio - 1.01126) <= 1e-4
    bound = 25 / 44 * (1 + math.sqrt(1 - 8 * math.pi / 75))
    assert abs(bound - 1.03148) <= 1e-4
    report(3, f"boundary ratios {ratio:.5f} and {bound:.5f} reproduced to 1e-4")


def test_criterion_4_G_identities():
    assert abs(bf.OMEGA0 - 0.108998) <= 1e-6
    from scipy.integrate import quad

    for lam in (1.0, 7.3, 150.0):
        assert abs(bf.G(lam, lam / 2) - bf.OMEGA0 * lam) <= 1e-6 * max(lam, 1)
        val, _ = quad(lambda z: bf.G(lam, z), 0, lam, limit=500)
        assert abs(val - lam * lam / 8) <= 1e-9 * (lam * lam / 8)
    report(4, "half-argument constant and integral identity hold "
              "for lambda in {1, 7.3, 150}")


def test_criterion_5_floor_sum_property_suites():
    rng = random.Random(73)
    n = 10_000
    for _ in range(n):
        assert fs.check_concave(*fs.random_concave_instance(rng)).ok
    for _ in range(n):
        pl, a, b, c, p = fs.random_t25_instance(rng, interior_drop=rng.random() < 0.5)
        assert fs.check_t25(pl, a, b, c, drop_at=p).ok
    for _ in range(n):
        assert fs.check_convex(*fs.random_convex_instance(rng)).ok
    for _ in range(n):
        assert fs.check_convex_improved(*fs.random_convex_improved_instance(rng)).ok
    for _ in range(1_000):
        pl, a, b = fs.random_convex_instance(rng)  # non-negative instances
        assert fs.tfs(pl, a, b).value == fs.lattice_count_brute(pl, a, b)
    report(5, f"4 x {n} theorem instances and 1000 brute-force lattice counts, "
              "zero violations")


def test_criterion_6_polya_inequality_desk_grid():
    checked = 0
    for r10 in range(1, 10):
        r = r10 / 10
        h = oracle.cylinder_h(r)
        for q in range(1, 161):
            lam = q * 0.25
            mu = r * lam
            n = oracle.count_annulus(r, lam)
            assert n < (1 - r * r) * lam * lam / 4
            p = fs.P(lam, mu)
            pbar = fs.P_bar(Q(q, 4), Q(r10, 10) * Q(q, 4))
            assert n <= p <= pbar
            assert n <= oracle.count_cylinder(h, lam)
            checked += 1
    report(6, f"counting inequality, majorant chain, and cylinder domination "
              f"on {checked} grid points")


def test_criterion_7_disk_two_term_bound():
    for q in range(1, 601):
        lam = q * 0.1
        assert oracle.count_disk(lam) < lam * lam / 4 - math.floor(bf.OMEGA0 * lam) / 2
    report(7, "two-term disk bound holds at 600 points up to lambda = 60")


def test_criterion_8_phase_sandwiches_and_method_agreement():
    eps = oracle.ORACLE_EPS
    samples = 0
    for z in list(range(21)) + [0.5, 7.3]:
        lam = 0.4
        while lam <= 3 * z + 40:
            th = oracle.theta(z, lam) / math.pi
            assert bf.F(lam, z) - 0.25 - eps < th < bf.G(lam, z) - 0.25 + eps
            samples += 1
            lam += 0.5
    rng = random.Random(88)
    for _ in range(2_500):
        lam = rng.uniform(2.0, 80.0)
        mu = rng.uniform(0.05, 0.95) * lam
        z = rng.uniform(0.0, lam)
        g = oracle.gamma(lam, mu, z)
        assert g < bf.G(lam, z) - bf.F(mu, z) + eps
        assert g < bf.G(lam, z) + 0.25 + eps
        if z < mu:
            assert g < bf.Phi(lam, mu, z) + bf.H(mu, z) + eps
        if z <= mu:
            assert bf.Phi(lam, mu, z) - eps < g < bf.Phi(lam, mu, z) + 0.25 + eps
        samples += 1
    assert samples >= 5_000
    agreements = 0
    for _ in range(500):
        r = rng.uniform(0.05, 0.95)
        m = rng.randint(0, 40)
        lam = rng.uniform(0.5, 60.0)
        assert (math.floor(oracle.Theta(r, m, lam) / math.pi)
                == oracle.count_zeros_crossproduct(r, m, lam))
        agreements += 1
    report(8, f"{samples} phase-bound samples with zero violations; "
              f"{agreements}/500 zero-count method agreements")


def test_criterion_9_coverage_scan():
    rep = rg.coverage_check(lambda_max=400.0, step=Q(1, 4))
    assert rep.ok, (rep.uncovered[:5], rep.ordering_failures[:5])
    assert rep.points >= 1_250_000
    report(9, f"no hole among {rep.points} grid points up to lambda = 400 "
              f"({rep.exact_rechecks} exact boundary rechecks)")
