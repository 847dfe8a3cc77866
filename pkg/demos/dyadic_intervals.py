"""Dyadic intervals nest like balls, and match balls of binary sequences.

Run with ``python3 demos/dyadic_intervals.py``.
"""

from fractions import Fraction

from ultrametric import DyadicInterval, classify_dyadic, dyadic_phi_correspondence, enclosing_dyadic, parse_sequence

pairs = [
    (DyadicInterval(0, 0), DyadicInterval(1, 0)),
    (DyadicInterval(0, 0), DyadicInterval(0, 1)),
    (DyadicInterval(3, -2), DyadicInterval(1, -1)),
]
for a, b in pairs:
    print(f"{a} = [{a.lo}, {a.hi}) vs {b} = [{b.lo}, {b.hi}): {classify_dyadic(a, b).value}")

x = Fraction(5, 7)
print(f"\nintervals containing {x}:")
for level in range(0, -5, -1):
    cell = enclosing_dyadic(x, level)
    print(f"  level {level}: {cell} = [{cell.lo}, {cell.hi})")

center = parse_sequence("1011;c0")
for depth in range(5):
    cell, image = dyadic_phi_correspondence(center, depth)
    print(f"depth {depth}: sequences agreeing with {center} map onto {image}, closure of {cell}")
