"""
Gaussian cubature on Omega and minimal cubature on G.

Both constructions start from the n-point Gauss rule ``(x_k, lambda_k)`` of a
weight w on [1, inf).  On Omega the nodes are ``(x_j + x_k, x_j x_k)``; on G
each pair (j, k) contributes the four images of the half-angle point
``(cosh((th_j - th_k)/2), cosh((th_j + th_k)/2))`` with ``x_k = cosh(th_k)``.
Rules integrate against the c_w**2-normalized measure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .domain_map import acosh_stable, group_images
from .errors import InvalidParameter, NumericalFailure
from .orthopoly1d import WeightSpec1D, gauss_rule

__all__ = [
    "CubatureRule2D",
    "gauss_rule_omega",
    "minimal_rule_g",
    "lower_bound_nodes",
    "dim_poly2",
    "apply",
    "node_count",
    "attains_bound",
    "expected_node_count",
]

GAMMAS = (-0.5, 0.5)


@dataclass(frozen=True, eq=False)
class CubatureRule2D:
    """A cubature rule on Omega (``domain="omega"``) or G (``domain="g"``).

    ``nodes`` has shape (N, 2).  ``verified_degree`` stays ``None`` until an
    exactness report fills it in (see :func:`with_verified_degree`).
    """

    domain: str
    gamma: float
    n: int
    claimed_degree: int
    nodes: np.ndarray
    weights: np.ndarray
    weight_spec: WeightSpec1D
    verified_degree: int | None = None

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float).reshape(-1, 2)
        weights = np.array(self.weights, dtype=float).reshape(-1)
        if nodes.shape[0] != weights.size:
            raise InvalidParameter("nodes and weights differ in length")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return self.weights.size

    def with_verified_degree(self, degree: int) -> "CubatureRule2D":
        return replace(self, verified_degree=int(degree))

    def __call__(self, f) -> float:
        return apply(self, f)


def _check_gamma_n(gamma: float, n: int) -> float:
    if gamma not in GAMMAS:
        raise InvalidParameter("gamma must be -0.5 or 0.5")
    minimum = 1 if gamma < 0 else 2
    if n < minimum:
        raise InvalidParameter(f"n must be at least {minimum} for gamma={gamma}")
    return float(gamma)


def _pair_weights(lam: np.ndarray, x: np.ndarray, gamma: float):
    """Yield ``(j, k, weight)`` for the admissible index pairs in (k, j) order."""
    n = lam.size
    for k in range(n):
        if gamma < 0:
            for j in range(k + 1):
                w = lam[j] * lam[k]
                yield j, k, (0.5 * w if j == k else w)
        else:
            for j in range(k):
                yield j, k, lam[j] * lam[k] * (x[j] - x[k]) ** 2


def gauss_rule_omega(weight: WeightSpec1D, gamma: float, n: int) -> CubatureRule2D:
    """Gaussian cubature for ``W_gamma`` on Omega.

    gamma = -1/2 gives degree 2n-1 with n(n+1)/2 nodes; gamma = +1/2 gives
    degree 2n-3 with n(n-1)/2 nodes.
    """
    gamma = _check_gamma_n(gamma, n)
    rule = gauss_rule(weight, n)
    x, lam = rule.nodes, rule.weights
    nodes, weights = [], []
    for j, k, w in _pair_weights(lam, x, gamma):
        nodes.append((x[j] + x[k], x[j] * x[k]))
        weights.append(w)
    degree = 2 * n - 1 if gamma < 0 else 2 * n - 3
    return CubatureRule2D("omega", gamma, n, degree, np.array(nodes), np.array(weights), weight)


def minimal_rule_g(weight: WeightSpec1D, gamma: float, n: int) -> CubatureRule2D:
    """Minimal cubature for the centrally symmetric weight on G.

    Every admissible (j, k) contributes four nodes of equal weight, a quarter
    of the corresponding Omega weight.  ``claimed_degree`` is 4n-1 for
    gamma = -1/2 and 4n-3 for gamma = +1/2; the degree actually attained is
    measured by :func:`minqube.verify.exactness_report`.
    """
    gamma = _check_gamma_n(gamma, n)
    rule = gauss_rule(weight, n)
    x, lam = rule.nodes, rule.weights
    theta = np.array([acosh_stable(v) for v in x])
    nodes, weights = [], []
    for j, k, w in _pair_weights(lam, x, gamma):
        s = math.cosh(0.5 * (theta[j] - theta[k]))
        t = math.cosh(0.5 * (theta[j] + theta[k]))
        orbit = group_images(s, t)
        if len(orbit) != 4:
            raise NumericalFailure(f"degenerate orbit for pair ({j}, {k})")
        nodes.extend(orbit)
        weights.extend([0.25 * w] * 4)
    degree = 4 * n - 1 if gamma < 0 else 4 * n - 3
    return CubatureRule2D("g", gamma, n, degree, np.array(nodes), np.array(weights), weight)


def dim_poly2(m: int) -> int:
    """Dimension of bivariate polynomials of total degree at most m."""
    return 0 if m < 0 else (m + 1) * (m + 2) // 2


def lower_bound_nodes(degree: int, centrally_symmetric: bool) -> int:
    """Lower bound on the node count of a rule of odd degree ``2m - 1``.

    ``m(m+1)/2`` in general, plus ``floor(m/2)`` for centrally symmetric weights.
    """
    if degree < 1 or degree % 2 == 0:
        raise InvalidParameter("degree must be a positive odd integer")
    m = (degree + 1) // 2
    bound = dim_poly2(m - 1)
    if centrally_symmetric:
        bound += m // 2
    return bound


def expected_node_count(domain: str, gamma: float, n: int) -> int:
    if domain == "omega":
        return n * (n + 1) // 2 if gamma < 0 else n * (n - 1) // 2
    return 2 * n * (n + 1) if gamma < 0 else 2 * n * (n - 1)


def apply(rule: CubatureRule2D, f: Callable) -> float:
    """``sum_i w_i f(node_i)`` with an exactly rounded sum in node order.

    ``f`` is called as ``f(x, y)`` on the coordinate arrays.
    """
    vals = np.broadcast_to(np.asarray(f(rule.nodes[:, 0], rule.nodes[:, 1]), dtype=float),
                           rule.weights.shape)
    if not np.all(np.isfinite(vals)):
        raise NumericalFailure("integrand is not finite at every node")
    return math.fsum(rule.weights * vals)


def node_count(rule: CubatureRule2D) -> int:
    return len(rule)


def attains_bound(rule: CubatureRule2D, degree: int | None = None) -> bool:
    """Whether the node count equals the lower bound at the rule's degree.

    The degree is, in order of preference, ``degree``, ``rule.verified_degree``
    or, for Omega rules only, ``rule.claimed_degree``.  G rules without a
    verified degree are verified on the spot.
    """
    if degree is None:
        degree = rule.verified_degree
    if degree is None:
        if rule.domain == "omega":
            degree = rule.claimed_degree
        else:
            from .verify import exactness_report

            degree = exactness_report(rule, rule.claimed_degree + 2).achieved_degree
    if degree < 1 or degree % 2 == 0:
        return False
    return node_count(rule) == lower_bound_nodes(degree, centrally_symmetric=rule.domain == "g")
