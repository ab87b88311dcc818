#!/usr/bin/env python3
"""A tour of the exact-arithmetic layer.

Every certified number in this package is a fraction, and every irrational
quantity enters only through a BoundPair: two rationals provably bracketing
it.  This script shows the three enclosure primitives and what "directed
rounding" buys: the truth is always inside, at any precision.
"""

from fractions import Fraction as Q

from polyacert import arccos_bounds, pi_bounds, rat_floor, sqrt_bounds

print("pi at increasing precision (width <= 10^-k):")
for k in (2, 6, 12, 24):
    b = pi_bounds(k)
    print(f"  k={k:2d}  lo={float(b.lo):.15f}  hi={float(b.hi):.15f}  "
          f"width={float(b.width):.1e}")

print("\nsqrt(2): lower and upper bounds verified by exact squaring")
for k in (2, 6, 12):
    b = sqrt_bounds(Q(2), k)
    print(f"  k={k:2d}  {b.lo} <= sqrt(2) <= {b.hi}   "
          f"(lo^2={float(b.lo ** 2):.12f}, hi^2={float(b.hi ** 2):.12f})")

print("\nsqrt of a perfect square collapses to an exact point:")
b = sqrt_bounds(Q(9, 16), 12)
print(f"  sqrt(9/16) = [{b.lo}, {b.hi}]")

print("\narccos on [0,1], the one transcendental the bound functions need:")
for q in (Q(0), Q(1, 2), Q(707, 1000), Q(99, 100), Q(1)):
    b = arccos_bounds(q, 12)
    print(f"  arccos({str(q):7s}) in [{float(b.lo):.13f}, {float(b.hi):.13f}]")

# arccos(1/2) = pi/3: the two independent enclosures must overlap.
third = pi_bounds(14)
b = arccos_bounds(Q(1, 2), 12)
assert b.lo <= third.hi / 3 and third.lo / 3 <= b.hi
print("\narccos(1/2) enclosure overlaps pi_bounds/3: consistent.")

print(f"\nexact floors never wobble: floor(179/82) = {rat_floor(Q(179, 82))}, "
      f"floor(-1/2) = {rat_floor(Q(-1, 2))}")
