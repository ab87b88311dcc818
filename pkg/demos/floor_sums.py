#!/usr/bin/env python3
"""Trapezoidal floor sums: counting lattice points under a graph.

T(g, a, b) adds floor(g(m)) over the integers of [a, b], half-weighting
the edges.  For non-negative g that is exactly the number of integer
points under the graph.  Four comparison theorems trade shape information
(concavity, convexity, Lipschitz constants) for bounds of T against the
integral of g; the checkers below validate hypotheses first, then measure
the margin the inequality leaves.
"""

import math
import random
from fractions import Fraction as Q

from polyacert import (G, OMEGA0, P, P_bar, SmoothCurve, check_concave,
                       check_convex, check_convex_improved, check_t25,
                       lattice_count_brute, tfs)
from polyacert.floorsum import random_t25_instance

print("T(g,0,4) for g = 2.5 constant:", tfs(lambda m: 2.5, 0, 4).value)
print("T(z,0,3) for the identity:    ", tfs(lambda m: m, 0, 3).value)

rng = random.Random(1)
pl, a, b, c, p = random_t25_instance(rng, interior_drop=True)
res = check_t25(pl, a, b, c, drop_at=p)
print(f"\na concave Lip_{float(c):.3f} instance on [{a},{b}], floor drop at {p}:")
print(f"  T = {res.floor_sum} <= bound {float(res.bound):.6f} "
      f"(margin {float(res.margin):.6f})")
print("  brute-force lattice count agrees:",
      lattice_count_brute(pl.shifted(0), a, b) == tfs(pl, a, b).value
      if pl.eval(b) >= 0 else "(signed instance, skipped)")

print("\nthe convex theorems applied to G itself:")
for lam in (7.3, 23.1):
    n3 = math.floor(lam) + 1
    curve = SmoothCurve(lambda z, lam=lam: G(lam, z))
    plain = check_convex(curve, 0, n3)
    improved = check_convex_improved(curve, 0, n3, lam / 2)
    print(f"  lam={lam}: plain margin {plain.margin:.4f}, "
          f"improved margin {improved.margin:.4f} "
          f"(extra floor(G(lam/2))/4 = {math.floor(G(lam, lam / 2)) / 4})")

print("\nthe two-term disk consequence 2T(G+1/4) <= lam^2/4 - 2 floor(w0 lam)/4:")
for lam in (10.0, 25.0, 60.0):
    t2 = 2 * tfs(lambda m: G(lam, m) + 0.25, 0, math.floor(lam) + 1).value
    rhs = lam * lam / 4 - 2 * math.floor(OMEGA0 * lam) / 4
    print(f"  lam={lam:5.1f}: 2T = {float(t2):8.1f}  vs  {rhs:8.2f}")

print("\nand the certifier's majorant chain at one point:")
lam, mu = Q(30), Q(12)
print(f"  P({lam},{mu})     = {P(float(lam), float(mu))}   (float floors)")
print(f"  P_bar({lam},{mu}) = {P_bar(lam, mu)}   (exact, provably >= P >= N)")
