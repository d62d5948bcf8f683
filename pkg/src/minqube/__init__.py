"""Minimal cubature rules on an unbounded centrally symmetric domain.

The rules are built from a 1D Gauss rule on [1, inf): Gaussian cubature on
the region Omega between the line v = u - 1 and the parabola v = u**2/4, and
minimal cubature on G = (-inf, -1]^2 U [1, inf)^2 obtained through the
half-angle map.  :mod:`minqube.verify` checks them against independent oracles.
"""
from .cubature import (
    CubatureRule2D,
    apply,
    attains_bound,
    gauss_rule_omega,
    lower_bound_nodes,
    minimal_rule_g,
    node_count,
)
from .errors import DomainError, IndexOutOfRange, InvalidParameter, NumericalFailure, SearchFailure
from .opbasis2d import GBasis, OmegaBasis, eval_P, eval_Q
from .orthopoly1d import RecurrenceTable, WeightSpec1D, gauss_rule
from .verify import exactness_report, sharpness_check, verify_rule

__version__ = "0.1.0"

__all__ = [
    "CubatureRule2D",
    "DomainError",
    "GBasis",
    "IndexOutOfRange",
    "InvalidParameter",
    "NumericalFailure",
    "OmegaBasis",
    "RecurrenceTable",
    "SearchFailure",
    "WeightSpec1D",
    "apply",
    "attains_bound",
    "eval_P",
    "eval_Q",
    "exactness_report",
    "gauss_rule",
    "gauss_rule_omega",
    "lower_bound_nodes",
    "minimal_rule_g",
    "node_count",
    "sharpness_check",
    "verify_rule",
]
