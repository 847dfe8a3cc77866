"""Powers of an ultrametric stay ultrametric; powers of the line metric break.

Run with ``python3 demos/snowflakes_and_chains.py``.
"""

import random
from fractions import Fraction

from ultrametric import FiniteMetricSpace, cauchy_chain_check, check_axioms, quasi_bound_check, snowflake
from ultrametric.generate import sequence_space_sample
from ultrametric.metricprops import chain_violations, max_inequality_ratio

line = FiniteMetricSpace("012", [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
print("line:", check_axioms(line))
for tau in (Fraction(1, 2), 1, 2):
    print(f"  d^{tau}:", snowflake(line, tau).report)
print("  worst ratio d(x,z) / max(d(x,y), d(y,z)):", max_inequality_ratio(line.dist))
print("  quasi bound with tau = 1/2:", quasi_bound_check(line, Fraction(1, 2)))

space = sequence_space_sample(20, random.Random(2), rho=Fraction(1, 3))
print(f"\n{len(space)} sampled sequences:", check_axioms(space))
for tau in (Fraction(1, 2), 2, 3):
    print(f"  d^{tau}:", snowflake(space, tau).report)

rng = random.Random(8)
chain = [rng.choice(space.labels) for _ in range(10)]
print("\na random chain obeys the chain bound:", cauchy_chain_check(space, chain))
print("the walk 0, 1, 2 on the line breaks it at", chain_violations(line, ["0", "1", "2"]))
