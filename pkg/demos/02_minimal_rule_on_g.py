# coding: utf-8

# # A minimal cubature rule on two quarter planes
#
# G is the union of (-inf,-1]^2 and [1,inf)^2.  Each pair of 1D Gauss nodes
# x_j = cosh(th_j), x_k = cosh(th_k) gives four nodes: the point
# (cosh((th_j - th_k)/2), cosh((th_j + th_k)/2)), its mirror image across the
# diagonal, and the central reflections of both.

import numpy as np

from minqube import (
    WeightSpec1D,
    exactness_report,
    lower_bound_nodes,
    minimal_rule_g,
    node_count,
)

w = WeightSpec1D.shifted_laguerre(0.0)

# With one Gauss node there is a single orbit of four points.

r1 = minimal_rule_g(w, -0.5, 1)
print(np.column_stack([r1.nodes, r1.weights]))

# The n point rule should be exact through degree 4n - 1 and no further.

for n in range(1, 6):
    rule = minimal_rule_g(w, -0.5, n)
    rep = exactness_report(rule, 4 * n + 1)
    print(f"n={n}: {node_count(rule):3d} nodes, bound {lower_bound_nodes(4 * n - 1, True):3d}, "
          f"exact through degree {rep.achieved_degree}, first failure {rep.witness['function']}")

# The node count equals the lower bound for centrally symmetric rules, which
# is what makes the rule minimal.
