"""Certified lattice-count bounds and eigenvalue counting for annuli.

Library layout:

    exactnum      exact rationals, directed-rounding enclosures (pi, sqrt, arccos)
    boundfns      the G/H/F/Phi bound functions, float and verified modes
    floorsum      trapezoidal floor sums, the P/P_bar majorants, theorem checkers
    besseloracle  floating-point phase functions and eigenvalue counts
    regions       analytic region classifier and coverage scan
    certifier     rectangle sweep, certificates, independent verification
    cli           command-line front end (``polyacert``)
"""

from .besseloracle import (Theta, count_annulus, count_cylinder, count_disk,
                           count_zeros_crossproduct, cylinder_h, gamma, theta)
from .boundfns import FLOAT, OMEGA0, EvalMode, F, G, H, Phi, lipschitz_c, \
    verified_lower, verified_upper
from .certifier import (Certificate, CertRect, MarginError, ProgressError,
                        Strip, SweepConfig, read_certificate, rect_from_point,
                        run_cover, run_strip, verify_certificate,
                        write_certificate)
from .exactnum import (BoundPair, DomainError, PrecisionError, Rational,
                       arccos_bounds, pi_bounds, rat_floor, sqrt_bounds)
from .floorsum import (CheckResult, FloorSumReport, HypothesisViolation, P,
                       P_bar, PiecewiseLinear, SmoothCurve, check_concave,
                       check_convex, check_convex_improved, check_t25,
                       lattice_count_brute, tfs)
from .regions import (RegionLabel, S_poly, classify, coverage_check, in_comp)

__version__ = "0.1.0"
