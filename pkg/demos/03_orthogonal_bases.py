# coding: utf-8

# # Orthogonal polynomials and their common zeros
#
# The nodes of the minimal rule are the common zeros of the family-1
# orthogonal polynomials of degree 2n.  We check that, then look at the
# orthogonality of the basis and at its closed Laguerre form.

import math

import numpy as np

from minqube import GBasis, WeightSpec1D, minimal_rule_g
from minqube.opbasis2d import gram_matrix
from minqube.verify import common_zero_check, closed_form_discrepancy

w = WeightSpec1D.shifted_laguerre(0.5)
n = 3
rule = minimal_rule_g(w, -0.5, n)
res = common_zero_check(rule)
print(f"{res.count} polynomials of degree {res.degree}, largest scaled value at the nodes {res.residual:.1e}")

# Orthogonality under the exact product-Gauss inner product.

basis = GBasis(w, -0.5, 4)
g = gram_matrix(basis, 4, 8)
print(np.array2string(g / np.sqrt(np.outer(np.diag(g), np.diag(g))), precision=3, suppress_small=True))

# For the shifted Laguerre weight the even family-1 polynomials are products of
# Laguerre polynomials in cosh(theta - phi) - 1 and cosh(theta + phi) - 1.
# Dropping the "- 1" does not work:

out = closed_form_discrepancy(0.5, 2)
for k, row in out["family1"].items():
    print(f"k={k}: shifted residual {row['shifted']['relative_residual']:.1e}, "
          f"unshifted residual {row['unshifted']['relative_residual']:.1e}, "
          f"scale {row['shifted']['scale']:g}")
