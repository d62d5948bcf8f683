# coding: utf-8

# # Gauss rules on [1, inf)
#
# Everything in this package starts from a one dimensional Gauss rule for the
# shifted Laguerre weight (x-1)^alpha exp(-(x-1)).  Its recurrence is known in
# closed form, so the rule comes straight out of the Jacobi matrix.

import math

import numpy as np

from minqube.orthopoly1d import (
    WeightSpec1D,
    gauss_rule,
    shifted_laguerre_moments,
    shifted_laguerre_recurrence,
)

# The first recurrence coefficients for alpha = 0.  b[0] is the total mass.

table = shifted_laguerre_recurrence(0.0, 4)
print("a =", table.a)
print("b =", table.b)

# Two points: the nodes are the roots of (x-3)^2 - 2.

w = WeightSpec1D.shifted_laguerre(0.0)
rule = gauss_rule(w, 2)
print("nodes  ", rule.nodes, "expected", [3 - math.sqrt(2), 3 + math.sqrt(2)])
print("weights", rule.weights)

# Weights are normalized, so they sum to one.  A 6 point rule integrates
# every monomial up to degree 11 exactly.

alpha = 1.5
w = WeightSpec1D.shifted_laguerre(alpha)
rule = gauss_rule(w, 6)
mu = shifted_laguerre_moments(alpha, 12)
for d in (0, 5, 11, 12):
    err = abs(rule(lambda x: x**d) - mu[d]) / mu[d]
    print(f"degree {d:2d}: relative error {err:.1e}")
