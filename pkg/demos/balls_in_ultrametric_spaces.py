"""Balls in an ultrametric space never overlap partially; on the real line they do.

Run with ``python3 demos/balls_in_ultrametric_spaces.py``.
"""

import random
from collections import Counter
from fractions import Fraction

from ultrametric import Ball, FiniteMetricSpace, Kind, ball_members, ball_union, classify_balls
from ultrametric.balls import all_balls, center_invariance
from ultrametric.generate import random_dendrogram_space

line = FiniteMetricSpace("012", [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
left, right = Ball("0", 2), Ball("2", 2)
print("real line, B(0,2) vs B(2,2):", classify_balls(line, left, right).value)
print("  members:", sorted(ball_members(line, left)), sorted(ball_members(line, right)))
print("  every point of B[0,1] centres the same closed ball:", center_invariance(line, "0", 1))

space = random_dendrogram_space(12, random.Random(4), levels=[Fraction(1), Fraction(1, 2), Fraction(1, 5)])
print(f"\ndendrogram with {len(space)} points, distances {[str(d) for d in space.distances()]}")
balls = all_balls(space)
verdicts = Counter(classify_balls(space, b1, b2).value for b1 in balls for b2 in balls)
print("relations over all ball pairs:", dict(verdicts))

small, big = Ball("p0", Fraction(1, 2), Kind.CLOSED), Ball("p5", 1, Kind.CLOSED)
union = ball_union(space, small, big)
if union is None:
    print("the two balls are disjoint")
else:
    print(f"union of B[p0,1/2] and B[p5,1] is the ball centred at {union.center} of radius {union.radius}")
