"""Command-line surface for the certification laboratory.

Subcommands map one-to-one onto library entry points:

    certify    run the rectangle sweep and write a certificate file
    verify     independently re-check a certificate file
    classify   region membership of a parameter point
    count      eigenvalue counts and bounds at one (r, lambda)
    bounds     evaluate G/H/F/Phi at a point, float and verified
    theorems   run the floor-sum and phase-sandwich property suites
    coverage   grid scan showing theory + COMP leave no hole
    plotdata   CSV columns behind the standard figures

Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
3 margin/progress error inside the sweep.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
import time
from fractions import Fraction

from . import besseloracle as oracle
from . import boundfns, certifier, floorsum, regions

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def parse_rational(text: str) -> Fraction:
    """Accept 'p/q' or a decimal string; decimals are read exactly as
    p / 10^d, never through binary floating point."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({exc})")


def _fmt12(x: float) -> str:
    return f"{x:.12g}"


# ---------------------------------------------------------------------------
# certify / verify
# ---------------------------------------------------------------------------

def cmd_certify(args) -> int:
    resume = None
    if args.resume:
        resume = certifier.read_certificate(args.resume)
    config = (resume.config if resume is not None else certifier.SweepConfig(
        alpha=args.alpha, beta=args.beta, precision=args.precision,
        lambda_start=args.lambda_start, lambda_stop=args.lambda_stop,
        margin_retry=args.margin_retry))
    t0 = time.perf_counter()
    cert = certifier.run_cover(config, resume=resume)
    elapsed = time.perf_counter() - t0
    out = args.out or "certificate.txt"
    certifier.write_certificate(cert, out)
    s = cert.stats
    print(f"columns={s['columns']} evals={s['evaluations']} "
          f"final={s['final_lambda']} status={cert.status}")
    print(f"wall time {elapsed:.1f}s, certificate written to {out}")
    if cert.status != "complete":
        print(f"sweep stopped early: {cert.error}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_verify(args) -> int:
    cert = certifier.read_certificate(args.certificate)
    report = certifier.verify_certificate(cert)
    print(f"rectangles={report.rectangles} triangles={report.triangles}")
    for f in report.failures:
        print(f"FAIL {f}")
    print("verdict: " + ("pass" if report.ok else "fail"))
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# classify / count / bounds
# ---------------------------------------------------------------------------

def cmd_classify(args) -> int:
    labels = regions.classify(args.lam, args.mu)
    names = sorted(l.value for l in labels) or [regions.RegionLabel.NONE.value]
    print(f"({args.lam}, {args.mu}) -> {' '.join(names)}")
    return EXIT_OK


def cmd_count(args) -> int:
    r, lam = args.r, args.lam
    if not 0 < r < 1 or lam <= 0:
        print("need 0 < r < 1 and lambda > 0", file=sys.stderr)
        return EXIT_USAGE
    mu = r * lam
    n = oracle.count_annulus(float(r), float(lam))
    bound = float((1 - r * r) * lam * lam / 4)
    p = floorsum.P(float(lam), float(mu))
    pbar = floorsum.P_bar(lam, mu, args.precision)
    cyl = oracle.count_cylinder(oracle.cylinder_h(float(r)), float(lam))
    labels = sorted(l.value for l in regions.classify(lam, mu))
    print(f"r={r} lambda={lam} mu={mu}")
    print(f"N_r(lambda)      = {n}")
    print(f"Polya bound      = {_fmt12(bound)}  ({'OK' if n < bound else 'VIOLATION'})")
    print(f"P  (float tfs)   = {p}")
    print(f"P_bar (exact)    = {pbar}")
    print(f"cylinder count   = {cyl}")
    print(f"regions          = {' '.join(labels) or 'NONE'}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    lam, mu, z = args.lam, args.mu, args.z
    k = args.precision
    lo, up = boundfns.verified_lower(k), boundfns.verified_upper(k)
    rows = [("G(lam, z)", lambda m: boundfns.G(lam, z, m))]
    if mu > 0:
        if z < mu:
            rows.append(("H(mu, z)", lambda m: boundfns.H(mu, z, m)))
        rows.append(("F(mu, z)", lambda m: boundfns.F(mu, z, m)))
        if mu < lam:
            rows.append(("Phi(lam, mu, z)", lambda m: boundfns.Phi(lam, mu, z, m)))
    print(f"lam={lam} mu={mu} z={z} precision={k}")
    for name, fn in rows:
        print(f"{name:16s} float={_fmt12(fn(boundfns.FLOAT))} "
              f"lower={float(fn(lo)):.15g} upper={float(fn(up)):.15g}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# theorems / coverage
# ---------------------------------------------------------------------------

def _run_suite(name, n, gen, check) -> tuple[str, int, int]:
    violations = 0
    for _ in range(n):
        if not check(gen()).ok:
            violations += 1
    return name, n, violations


def cmd_theorems(args) -> int:
    rng = random.Random(args.seed)
    n = args.instances
    suites = [
        _run_suite("concave (plain)", n,
                   lambda: floorsum.random_concave_instance(rng),
                   lambda inst: floorsum.check_concave(*inst)),
        _run_suite("concave Lipschitz drop", n,
                   lambda: floorsum.random_t25_instance(
                       rng, interior_drop=rng.random() < 0.5),
                   lambda inst: floorsum.check_t25(*inst[:4], drop_at=inst[4])),
        _run_suite("convex quarter-shift", n,
                   lambda: floorsum.random_convex_instance(rng),
                   lambda inst: floorsum.check_convex(*inst)),
        _run_suite("convex improved", n,
                   lambda: floorsum.random_convex_improved_instance(rng),
                   lambda inst: floorsum.check_convex_improved(*inst)),
    ]
    failed = False
    for name, total, violations in suites:
        ok = violations == 0
        failed |= not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: {violations}/{total} violations")

    # Phase sandwich: F_lam(z) - 1/4 < theta_z(lam)/pi < G_lam(z) - 1/4,
    # up to the oracle's saturation resolution.
    eps = oracle.ORACLE_EPS
    bad = total = 0
    for _ in range(max(200, n // 20)):
        z = rng.choice([rng.randint(0, 20), rng.uniform(0.0, 20.0)])
        lam = rng.uniform(0.2, 3 * z + 40)
        th = oracle.theta(z, lam) / math.pi
        total += 1
        if not (boundfns.F(lam, z) - 0.25 - eps < th < boundfns.G(lam, z) - 0.25 + eps):
            bad += 1
    ok = bad == 0
    failed |= not ok
    print(f"{'PASS' if ok else 'FAIL'} phase sandwich: {bad}/{total} violations")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_coverage(args) -> int:
    report = regions.coverage_check(lambda_max=args.lambda_max, step=args.step)
    print(f"points={report.points} exact_rechecks={report.exact_rechecks} "
          f"uncovered={len(report.uncovered)} "
          f"ordering_failures={len(report.ordering_failures)}")
    for lam, mu in report.uncovered[:10]:
        print(f"UNCOVERED ({lam}, {mu})")
    for name, lam in report.ordering_failures[:10]:
        print(f"ORDERING {name} fails at lambda={lam}")
    print("verdict: " + ("pass" if report.ok else "fail"))
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# plotdata
# ---------------------------------------------------------------------------

def _plot_bounds_gfh(lam: float, mu: float, steps: int) -> None:
    print("z,phi_plus_h,g_plus_quarter,gamma,g_minus_f")
    for i in range(steps + 1):
        z = lam * i / steps
        g = boundfns.G(lam, z)
        gmf = g - boundfns.F(mu, z)
        phih = (boundfns.Phi(lam, mu, z) + boundfns.H(mu, z)) if z < mu else math.nan
        gam = oracle.gamma(lam, mu, z)
        print(",".join(_fmt12(v) for v in (z, phih, g + 0.25, gam, gmf)))


def _plot_region_grid(steps: int) -> None:
    print("r,eta_I,eta_II,eta_III_minus,eta_III_plus,eta_IV,eta_V")
    for i in range(1, steps):
        r = i / steps
        row = [r, regions.eta_I(r), regions.eta_II(r)]
        row += ([regions.eta_III_minus(r), regions.eta_III_plus(r)]
                if r < 1 / (10 * math.sqrt(2)) else [math.nan, math.nan])
        row.append(regions.eta_IV(r) if r < 0.1 else math.nan)
        row.append(regions.eta_V(r))
        print(",".join(_fmt12(v) for v in row))


def _plot_strip_trace(path: str) -> None:
    cert = certifier.read_certificate(path)
    print("lambda_hi,width,rectangles")
    for strip in cert.strips:
        print(f"{_fmt12(float(strip.lambda_hi))},"
              f"{_fmt12(float(strip.lambda_hi - strip.lambda_lo))},"
              f"{len(strip.rects)}")


def cmd_plotdata(args) -> int:
    if args.figure == "bounds-GFH":
        _plot_bounds_gfh(float(args.lam), float(args.mu), args.steps)
    elif args.figure == "region-grid":
        _plot_region_grid(args.steps)
    elif args.figure == "strip-trace":
        if not args.certificate:
            print("strip-trace needs --certificate", file=sys.stderr)
            return EXIT_USAGE
        _plot_strip_trace(args.certificate)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser wiring.
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyacert", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, precision=True):
        if precision:
            p.add_argument("--precision", type=int, default=12,
                           help="enclosure precision k (width <= 10^-k)")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker cap (accepted for interface stability; "
                            "evaluation is serial and deterministic)")

    p = sub.add_parser("certify", help="run the certification sweep")
    common(p)
    p.add_argument("--alpha", type=parse_rational, default=Fraction(2, 3))
    p.add_argument("--beta", type=parse_rational, default=Fraction(99, 100))
    p.add_argument("--lambda-start", type=parse_rational, default=Fraction(150))
    p.add_argument("--lambda-stop", type=parse_rational, default=Fraction(5, 2))
    p.add_argument("--margin-retry", action="store_true",
                   help="retry a failing anchor once at precision k+6")
    p.add_argument("--out", help="certificate output path (default certificate.txt)")
    p.add_argument("--resume", help="partial certificate to continue from")
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("verify", help="independently re-check a certificate")
    common(p, precision=False)
    p.add_argument("certificate")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("classify", help="region membership of (lambda, mu)")
    p.add_argument("lam", type=parse_rational)
    p.add_argument("mu", type=parse_rational)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("count", help="counts and bounds at (r, lambda)")
    common(p)
    p.add_argument("--r", type=parse_rational, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_rational, required=True)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("bounds", help="evaluate G/H/F/Phi at a point")
    common(p)
    p.add_argument("--lambda", dest="lam", type=parse_rational, required=True)
    p.add_argument("--mu", type=parse_rational, default=Fraction(0))
    p.add_argument("--z", type=parse_rational, required=True)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("theorems", help="run the property suites")
    p.add_argument("--seed", type=int, default=20250)
    p.add_argument("--instances", type=int, default=2000)
    p.set_defaults(fn=cmd_theorems)

    p = sub.add_parser("coverage", help="grid scan of theory + COMP coverage")
    p.add_argument("--lambda-max", type=float, default=400.0)
    p.add_argument("--step", type=parse_rational, default=Fraction(1, 4))
    p.set_defaults(fn=cmd_coverage)

    p = sub.add_parser("plotdata", help="CSV data behind the standard figures")
    p.add_argument("--figure", required=True,
                   choices=["bounds-GFH", "region-grid", "strip-trace"])
    p.add_argument("--lambda", dest="lam", type=parse_rational, default=Fraction(40))
    p.add_argument("--mu", type=parse_rational, default=Fraction(25))
    p.add_argument("--steps", type=int, default=400)
    p.add_argument("--certificate", help="certificate file for strip-trace")
    p.set_defaults(fn=cmd_plotdata)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (certifier.MarginError, certifier.ProgressError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
