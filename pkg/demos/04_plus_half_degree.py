# coding: utf-8

# # How exact is the gamma = +1/2 rule?
#
# For gamma = +1/2 the rule has 2n(n-1) nodes.  Its nominal degree is 4n - 3,
# but measuring it against the oracle tells a different story.

from minqube import WeightSpec1D, lower_bound_nodes, minimal_rule_g
from minqube.verify import exactness_report

w = WeightSpec1D.shifted_laguerre(0.0)
for n in range(2, 7):
    rule = minimal_rule_g(w, 0.5, n)
    rep = exactness_report(rule, 4 * n - 3)
    marks = " ".join(f"{d}:{'ok' if p else 'x'}" for d, p in enumerate(rep.passed) if d >= 4 * n - 6)
    print(f"n={n}: {len(rule)} nodes (bound at 4n-5: {lower_bound_nodes(4 * n - 5, True)}), "
          f"measured degree {rep.achieved_degree}; {marks}")

# Degree 4n-4 fails every time.  Degree 4n-3 "passes" only because odd
# moments vanish on both sides by central symmetry.  The node count matches
# the lower bound for degree 4n-5, so the rule is still minimal at that degree.
