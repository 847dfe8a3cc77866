from fractions import Fraction as F

from ultrametric.space import FiniteMetricSpace


def euclidean(points):
    points = [F(p) for p in points]
    return FiniteMetricSpace([str(p) for p in points], [[abs(p - q) for q in points] for p in points])
