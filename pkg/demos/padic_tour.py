"""A short walk through p-adic absolute values and truncated expansions.

Run with ``python3 demos/padic_tour.py``.
"""

from fractions import Fraction

from ultrametric import abs_p, series_sum, to_padic, valuation

# Large powers of p are small: |2**10|_2 is 1/1024.
for x in (12, Fraction(1, 12), 2**10, Fraction(7, 9)):
    print(f"x = {x}: v_2 = {valuation(x, 2)}, |x|_2 = {abs_p(x, 2)}, |x|_3 = {abs_p(x, 3)}")

# The strong triangle inequality, checked on a pair where the sum gains valuation.
x, y = Fraction(3, 4), Fraction(5, 4)
print(f"|x + y|_2 = {abs_p(x + y, 2)} <= max(|x|_2, |y|_2) = {max(abs_p(x, 2), abs_p(y, 2))}")

# -1 is the 2-adic number with every digit equal to 1.
print("-1 in Z_2:", to_padic(-1, 2, 12))
print("1/3 in Z_2:", to_padic(Fraction(1, 3), 2, 12))

# 1 + p + p**2 + ... converges to 1/(1 - p): the terms tend to zero p-adically.
p, n = 3, 16
total, converged = series_sum([p**j for j in range(40)], p, n)
print(f"sum of 3**j for j < 40 to {n} digits: {total} (converged: {converged})")
print("matches 1/(1-3):", total.congruent(Fraction(1, 1 - p)))

# A run of ones never settles, however long it is.
_, converged = series_sum([1] * 64, 2, 8)
print("sixty-four ones, converged:", converged)
