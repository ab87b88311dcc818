"""Certification sweep over the computational region, and its verifier.

One exact evaluation p0 = P_bar(lam0, mu0) with positive margin
(lam0^2 - mu0^2)/4 - p0 > 0 certifies the counting inequality on a whole
rectangle reaching left to lam1 = alpha*Lambda + (1-alpha)*lam0 and up to
mu1 = beta*M(lam1) + (1-beta)*mu0, where Lambda = sqrt(mu0^2 + 4 p0) and
M(lam) = sqrt(lam^2 - 4 p0) bound the hyperbola lam^2 - mu^2 = 4 p0.  A
zero count certifies the entire triangle above and left of the anchor.

The sweep walks vertical strips right to left from lam = 150, stacking
rectangles upward within each strip; all rectangles of a strip share the
narrowest lam1 seen while the strip was built.  A strip ends either by
leaving the (dynamically shrinking) region or at a zero count, which also
lowers the region's upper boundary for all later strips.  Geometry values
are rounded onto the 10^-k grid with soundness-preserving directions
(lam1 up, mu1 down), so certificate rationals stay small and every margin
is re-checked exactly at emission.

Everything on this path is exact integer/rational arithmetic; the
certificate file can be re-verified from scratch by ``verify_certificate``,
which re-evaluates P_bar at every anchor and re-checks margin, abutment,
and coverage geometry without trusting the sweep.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .exactnum import from_fraction_scaled, sqrt_scaled
from .floorsum import P_bar
from .regions import COMP_LAMBDA_MAX, COMP_LAMBDA_MIN, COMP_SLOPE

FORMAT_VERSION = "polyacert-certificate v1"


class MarginError(ArithmeticError):
    """An anchor's margin (lam^2 - mu^2)/4 - P_bar came out non-positive."""


class ProgressError(ArithmeticError):
    """A sweep step failed to advance (degenerate rectangle geometry)."""


@dataclass(frozen=True)
class SweepConfig:
    alpha: Fraction = Fraction(2, 3)
    beta: Fraction = Fraction(99, 100)
    precision: int = 12
    lambda_start: Fraction = COMP_LAMBDA_MAX
    lambda_stop: Fraction = COMP_LAMBDA_MIN
    zeta_slope: Fraction = COMP_SLOPE
    margin_retry: bool = False  # one retry of a failing anchor at k + 6

    def __post_init__(self) -> None:
        if not 0 < self.alpha < 1 or not 0 < self.beta < 1:
            raise ValueError("alpha and beta must lie strictly inside (0, 1)")
        if self.precision < 2:
            raise ValueError("precision must be >= 2")
        if not self.lambda_start > self.lambda_stop > 0:
            raise ValueError("need lambda_start > lambda_stop > 0")


@dataclass(frozen=True)
class CertRect:
    """A certified rectangle, or (p = 0) the triangle above its anchor."""

    kind: str  # "rect" | "tri"
    lambda_lo: Fraction
    lambda_hi: Fraction
    mu_lo: Fraction
    mu_hi: Fraction | None  # None for triangles
    p: int
    anchor: tuple[Fraction, Fraction]

    def __post_init__(self) -> None:
        if self.kind not in ("rect", "tri"):
            raise ValueError(f"bad kind {self.kind!r}")
        if self.kind == "tri" and (self.p != 0 or self.mu_hi is not None):
            raise ValueError("triangle records need p = 0 and no mu_hi")
        if self.kind == "rect" and not 0 <= self.mu_lo < self.mu_hi:
            raise ValueError("rectangle needs 0 <= mu_lo < mu_hi")


@dataclass
class Strip:
    lambda_hi: Fraction
    lambda_lo: Fraction
    rects: list[CertRect] = field(default_factory=list)

    @property
    def triangle(self) -> CertRect | None:
        last = self.rects[-1] if self.rects else None
        return last if last is not None and last.kind == "tri" else None


@dataclass
class Certificate:
    config: SweepConfig
    strips: list[Strip]
    status: str  # "complete" | "partial"
    stats: dict
    error: str | None = None

    def triangle_caps(self) -> list[Fraction]:
        return [r.mu_lo for s in self.strips for r in s.rects if r.kind == "tri"]


@dataclass
class DynamicBoundary:
    """Current upper boundary of the region: the comp slope capped by the
    lowest zero-count ordinate seen so far."""

    slope: Fraction = COMP_SLOPE
    cap: Fraction | None = None

    def height(self, lam: Fraction) -> Fraction:
        h = self.slope * lam
        return h if self.cap is None else min(h, self.cap)

    def lower(self, mu_star: Fraction) -> None:
        self.cap = mu_star if self.cap is None else min(self.cap, mu_star)


def _round_dir(q: Fraction, prec: int, up: bool) -> Fraction:
    return Fraction(from_fraction_scaled(q, 10 ** prec, up), 10 ** prec)


def _sqrt_dir(q: Fraction, prec: int, up: bool) -> Fraction:
    return Fraction(sqrt_scaled(q, prec, up), 10 ** prec)


def _lambda1(lam0: Fraction, mu0: Fraction, p: int, cfg: SweepConfig) -> Fraction:
    lam_bar = _sqrt_dir(mu0 * mu0 + 4 * p, cfg.precision, up=True)
    return _round_dir(cfg.alpha * lam_bar + (1 - cfg.alpha) * lam0,
                      cfg.precision, up=True)


def _mu1(lam1: Fraction, mu0: Fraction, p: int, cfg: SweepConfig) -> Fraction:
    m_low = _sqrt_dir(lam1 * lam1 - 4 * p, cfg.precision, up=False)
    return _round_dir(cfg.beta * m_low + (1 - cfg.beta) * mu0,
                      cfg.precision, up=False)


def _require_margin(lam: Fraction, mu: Fraction, p: int) -> None:
    if lam * lam - mu * mu <= 4 * p:
        raise MarginError(f"margin non-positive at (lam={lam}, mu={mu}, p={p})")


def rect_from_point(lam0: Fraction, mu0: Fraction, p0: int,
                    config: SweepConfig = SweepConfig()) -> CertRect:
    """Standalone certified rectangle (or triangle, if p0 = 0) around one
    anchor, per the hyperbola construction."""
    lam0, mu0 = Fraction(lam0), Fraction(mu0)
    if p0 == 0:
        return CertRect("tri", Fraction(0), lam0, mu0, None, 0, (lam0, mu0))
    if (lam0 * lam0 - mu0 * mu0) / 4 - p0 <= 0:
        raise MarginError(f"margin non-positive at (lam={lam0}, mu={mu0}, p={p0})")
    lam1 = _lambda1(lam0, mu0, p0, config)
    if lam1 >= lam0:
        raise ProgressError(f"no lambda progress at (lam={lam0}, mu={mu0}, p={p0})")
    mu1 = _mu1(lam1, mu0, p0, config)
    if mu1 <= mu0:
        raise ProgressError(f"no mu progress at (lam={lam0}, mu={mu0}, p={p0})")
    _require_margin(lam1, mu1, p0)  # tight corner of the emitted rectangle
    return CertRect("rect", lam1, lam0, mu0, mu1, p0, (lam0, mu0))


def _evaluate_anchor(lam0: Fraction, mu: Fraction, cfg: SweepConfig,
                     stats: dict) -> int:
    p = P_bar(lam0, mu, cfg.precision)
    stats["evaluations"] += 1
    if p > 0 and lam0 * lam0 - mu * mu <= 4 * p and cfg.margin_retry:
        p = P_bar(lam0, mu, cfg.precision + 6)
        stats["evaluations"] += 1
    return p


def run_strip(lam0: Fraction, boundary: DynamicBoundary, cfg: SweepConfig,
              stats: dict) -> Strip:
    """Build one vertical strip anchored at lam0, climbing mu from 0.

    Rectangles are finalized only here at strip close: the shared left edge
    lam1 is the maximum of the per-anchor candidates, and each emitted
    rectangle's margin is then re-checked exactly against that final edge.
    A zero count appends the covering triangle and lowers the boundary.
    """
    mu = Fraction(0)
    lam1: Fraction | None = None
    anchors: list[tuple[Fraction, int]] = []
    triangle_mu: Fraction | None = None
    height = boundary.height(lam0)
    while True:
        if mu > height:
            break  # left the region: strip is tall enough
        p = _evaluate_anchor(lam0, mu, cfg, stats)
        if p == 0:
            triangle_mu = mu
            break
        if lam0 * lam0 - mu * mu <= 4 * p:
            raise MarginError(f"margin non-positive at (lam={lam0}, mu={mu}, p={p})")
        lam1_temp = _lambda1(lam0, mu, p, cfg)
        lam1 = lam1_temp if lam1 is None else max(lam1, lam1_temp)
        if lam1 >= lam0:
            raise ProgressError(f"no lambda progress at (lam={lam0}, mu={mu}, p={p})")
        mu_next = _mu1(lam1, mu, p, cfg)
        if mu_next <= mu:
            raise ProgressError(f"no mu progress at (lam={lam0}, mu={mu}, p={p})")
        anchors.append((mu, p))
        mu = mu_next

    if lam1 is None:
        # Zero count straight at mu = 0: the triangle alone covers every
        # lam <= lam0, so the sweep is finished.
        strip = Strip(lam0, Fraction(0))
    else:
        strip = Strip(lam0, lam1)
        tops = [m for m, _ in anchors[1:]] + [mu]
        for (mu_j, p_j), mu_top in zip(anchors, tops):
            _require_margin(lam1, mu_top, p_j)
            strip.rects.append(
                CertRect("rect", lam1, lam0, mu_j, mu_top, p_j, (lam0, mu_j)))
    if triangle_mu is not None:
        strip.rects.append(
            CertRect("tri", Fraction(0), lam0, triangle_mu, None, 0, (lam0, triangle_mu)))
        boundary.lower(triangle_mu)
    return strip


def run_cover(config: SweepConfig = SweepConfig(), resume: Certificate | None = None,
              progress=None, max_strips: int | None = None) -> Certificate:
    """Sweep strips right to left until lambda drops to the stop value.

    Returns a complete certificate, or a partial one (with the error
    recorded) if a strip raises; partial certificates carry everything
    needed to resume.  The sweep is a deterministic function of the config.
    """
    strips: list[Strip] = []
    boundary = DynamicBoundary(config.zeta_slope)
    stats = {"evaluations": 0}
    lam = config.lambda_start
    if resume is not None:
        if resume.config != config:
            raise ValueError("resume certificate was built with a different config")
        strips = list(resume.strips)
        stats["evaluations"] = resume.stats.get("evaluations", 0)
        for cap in resume.triangle_caps():
            boundary.lower(cap)
        if strips:
            lam = strips[-1].lambda_lo

    started = time.perf_counter()
    error = None
    while lam > config.lambda_stop:
        if max_strips is not None and len(strips) >= max_strips:
            break
        try:
            strip = run_strip(lam, boundary, config, stats)
        except (MarginError, ProgressError) as exc:
            error = f"{type(exc).__name__}: {exc}"
            break
        strips.append(strip)
        lam = strip.lambda_lo
        if progress is not None:
            progress(len(strips), lam, stats["evaluations"])

    status = "complete" if lam <= config.lambda_stop and error is None else "partial"
    final_stats = {
        "columns": len(strips),
        "evaluations": stats["evaluations"],
        "final_lambda": lam,
        "wall_seconds": time.perf_counter() - started,
    }
    return Certificate(config, strips, status, final_stats, error)


# ---------------------------------------------------------------------------
# Independent verification.
# ---------------------------------------------------------------------------

@dataclass
class VerifyReport:
    ok: bool
    rectangles: int
    triangles: int
    failures: list[str]


def verify_certificate(cert: Certificate, reevaluate: bool = True) -> VerifyReport:
    """Re-check a certificate from scratch: every rectangle margin against a
    freshly computed P_bar at its anchor, triangle zero-count claims, strip
    abutment in lambda, and in-strip coverage up to the dynamic boundary.
    Uses nothing from the sweep besides the certificate contents."""
    cfg = cert.config
    fails: list[str] = []
    n_rect = n_tri = 0
    if not cert.strips:
        return VerifyReport(False, 0, 0, ["certificate has no strips"])
    if cert.strips[0].lambda_hi != cfg.lambda_start:
        fails.append("first strip does not start at lambda_start")
    boundary = DynamicBoundary(cfg.zeta_slope)
    expected_hi = cfg.lambda_start
    for k, strip in enumerate(cert.strips):
        tag = f"strip {k} (lambda_hi={strip.lambda_hi})"
        if strip.lambda_hi != expected_hi:
            fails.append(f"{tag}: lambda interval does not abut previous strip")
        if not strip.lambda_lo < strip.lambda_hi:
            fails.append(f"{tag}: empty lambda interval")
        rects = [r for r in strip.rects if r.kind == "rect"]
        tris = [r for r in strip.rects if r.kind == "tri"]
        if len(tris) > 1:
            fails.append(f"{tag}: more than one triangle")
        mu_cursor = Fraction(0)
        for r in rects:
            n_rect += 1
            if (r.lambda_lo, r.lambda_hi) != (strip.lambda_lo, strip.lambda_hi):
                fails.append(f"{tag}: rectangle lambda range mismatch at mu={r.mu_lo}")
            if r.mu_lo != mu_cursor:
                fails.append(f"{tag}: mu gap at {r.mu_lo} (expected {mu_cursor})")
            if r.anchor != (strip.lambda_hi, r.mu_lo):
                fails.append(f"{tag}: anchor is not the rightmost-bottom corner")
            if r.lambda_lo ** 2 - r.mu_hi ** 2 <= 4 * r.p:
                fails.append(f"{tag}: margin fails at mu={r.mu_lo} (p={r.p})")
            if reevaluate:
                fresh = P_bar(r.anchor[0], r.anchor[1], cfg.precision)
                if r.p < fresh:
                    fails.append(f"{tag}: stored p={r.p} below fresh P_bar={fresh} "
                                 f"at mu={r.mu_lo}")
            mu_cursor = r.mu_hi
        for t in tris:
            n_tri += 1
            if t.anchor != (t.lambda_hi, t.mu_lo):
                fails.append(f"{tag}: triangle anchor mismatch")
            if t.lambda_hi != strip.lambda_hi:
                fails.append(f"{tag}: triangle not anchored on the strip's right edge")
            if rects and t.mu_lo != mu_cursor:
                fails.append(f"{tag}: triangle does not abut the rectangle stack")
            if reevaluate:
                fresh = P_bar(t.anchor[0], t.anchor[1], cfg.precision)
                if fresh != 0:
                    fails.append(f"{tag}: triangle claims zero count but P_bar={fresh}")
        if tris:
            boundary.lower(tris[0].mu_lo)
        elif rects:
            target = boundary.height(strip.lambda_hi)
            if mu_cursor < target:
                fails.append(f"{tag}: stack tops out at {mu_cursor}, below "
                             f"boundary {target}")
        else:
            fails.append(f"{tag}: no coverage records")
        expected_hi = strip.lambda_lo
    if cert.status == "complete" and expected_hi > cfg.lambda_stop:
        fails.append(f"final lambda {expected_hi} above stop {cfg.lambda_stop}")
    return VerifyReport(not fails, n_rect, n_tri, fails)


# ---------------------------------------------------------------------------
# Line-delimited certificate files (bit-exact round trip).
# ---------------------------------------------------------------------------

def _q(x: Fraction) -> str:
    return str(Fraction(x))


def serialize_certificate(cert: Certificate) -> str:
    cfg = cert.config
    lines = [FORMAT_VERSION,
             f"config alpha={_q(cfg.alpha)} beta={_q(cfg.beta)} "
             f"precision={cfg.precision} lambda_start={_q(cfg.lambda_start)} "
             f"lambda_stop={_q(cfg.lambda_stop)} zeta_slope={_q(cfg.zeta_slope)}",
             f"status {cert.status}",
             f"stats columns={cert.stats['columns']} "
             f"evaluations={cert.stats['evaluations']} "
             f"final_lambda={_q(cert.stats['final_lambda'])}"]
    if cert.error:
        lines.append(f"error {cert.error}")
    for k, strip in enumerate(cert.strips):
        lines.append(f"strip {k} lambda_hi={_q(strip.lambda_hi)} "
                     f"lambda_lo={_q(strip.lambda_lo)}")
        for r in strip.rects:
            fields = [r.kind,
                      f"lambda_lo={_q(r.lambda_lo)}",
                      f"lambda_hi={_q(r.lambda_hi)}",
                      f"mu_lo={_q(r.mu_lo)}"]
            if r.kind == "rect":
                fields.append(f"mu_hi={_q(r.mu_hi)}")
            fields += [f"p={r.p}",
                       f"anchor_lambda={_q(r.anchor[0])}",
                       f"anchor_mu={_q(r.anchor[1])}"]
            lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def _kv(tokens: list[str]) -> dict:
    return dict(t.split("=", 1) for t in tokens)


def parse_certificate(text: str) -> Certificate:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != FORMAT_VERSION:
        raise ValueError("not a certificate file (bad or missing version line)")
    kv = _kv(lines[1].split()[1:])
    config = SweepConfig(alpha=Fraction(kv["alpha"]), beta=Fraction(kv["beta"]),
                         precision=int(kv["precision"]),
                         lambda_start=Fraction(kv["lambda_start"]),
                         lambda_stop=Fraction(kv["lambda_stop"]),
                         zeta_slope=Fraction(kv["zeta_slope"]))
    status = lines[2].split(None, 1)[1]
    skv = _kv(lines[3].split()[1:])
    stats = {"columns": int(skv["columns"]), "evaluations": int(skv["evaluations"]),
             "final_lambda": Fraction(skv["final_lambda"])}
    error = None
    idx = 4
    if idx < len(lines) and lines[idx].startswith("error "):
        error = lines[idx].split(None, 1)[1]
        idx += 1
    strips: list[Strip] = []
    for ln in lines[idx:]:
        parts = ln.split()
        if parts[0] == "strip":
            kv = _kv(parts[2:])
            strips.append(Strip(Fraction(kv["lambda_hi"]), Fraction(kv["lambda_lo"])))
        elif parts[0] in ("rect", "tri"):
            kv = _kv(parts[1:])
            strips[-1].rects.append(CertRect(
                parts[0], Fraction(kv["lambda_lo"]), Fraction(kv["lambda_hi"]),
                Fraction(kv["mu_lo"]),
                Fraction(kv["mu_hi"]) if "mu_hi" in kv else None,
                int(kv["p"]),
                (Fraction(kv["anchor_lambda"]), Fraction(kv["anchor_mu"]))))
        else:
            raise ValueError(f"unrecognised record {parts[0]!r}")
    return Certificate(config, strips, status, stats, error)


def write_certificate(cert: Certificate, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_certificate(cert))


def read_certificate(path) -> Certificate:
    with open(path, encoding="ascii") as fh:
        return parse_certificate(fh.read())
