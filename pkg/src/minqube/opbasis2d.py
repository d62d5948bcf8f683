"""
Mutually orthogonal polynomial bases on Omega and on G.

On Omega, with ``(x, y)`` the roots of ``z**2 - u z + v`` and ``p_j`` the monic
orthogonal polynomials of a 1D weight,

    gamma = -1/2:  P_{k,n}(u, v) = p_n(x) p_k(y) + p_n(y) p_k(x)
    gamma = +1/2:  P_{k,n}(u, v) = (p_{n+1}(x) p_k(y) - p_{n+1}(y) p_k(x)) / (x - y)

The variant ``(i, j)`` replaces w by ``(x-1)**i (x+1)**j w``.  On G the basis
of degree 2n is ``P_{k,n}(2xy, x**2+y**2-1)`` and ``(x**2-y**2) P^{1,1}_{k,n-1}``;
degree 2n+1 uses ``(x+y) P^{0,1}_{k,n}`` and ``(x-y) P^{1,0}_{k,n}``.

All polynomials are products of monic 1D polynomials (orthogonal, not
normalized).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import eval_genlaguerre

from .domain_map import half_angle_roots, in_omega, uv_roots
from .errors import DomainError, IndexOutOfRange, InvalidParameter
from .orthopoly1d import (
    FACTOR_X2_MINUS_1,
    FACTOR_X_MINUS_1,
    FACTOR_X_PLUS_1,
    RecurrenceTable,
    WeightSpec1D,
    eval_monic_all,
    modified_recurrence,
)

__all__ = [
    "OmegaBasis",
    "GBasis",
    "variant_weight",
    "eval_P",
    "eval_Q",
    "family_size",
    "laguerre_explicit_even",
    "laguerre_closed_form_even",
    "gram_matrix",
]

VARIANTS = ((0, 0), (1, 0), (0, 1), (1, 1))
_FACTORS = {(1, 0): FACTOR_X_MINUS_1, (0, 1): FACTOR_X_PLUS_1, (1, 1): FACTOR_X2_MINUS_1}


def variant_weight(base: WeightSpec1D, variant: tuple[int, int], m: int) -> WeightSpec1D:
    """1D weight ``(x-1)**i (x+1)**j w`` with a recurrence of depth ``m``."""
    variant = tuple(variant)
    if variant not in VARIANTS:
        raise InvalidParameter(f"unknown variant {variant}")
    if variant == (0, 0):
        return base
    if variant == (1, 0) and base.family == "shifted_laguerre":
        return WeightSpec1D.shifted_laguerre(base.alpha + 1.0)
    table = modified_recurrence(base, _FACTORS[variant], m)
    return WeightSpec1D.custom(table)


@dataclass(frozen=True, eq=False)
class OmegaBasis:
    """Orthogonal basis for ``W_gamma`` (or a modified variant) on Omega up to degree ``max_n``."""

    weight_spec: WeightSpec1D
    gamma: float
    variant: tuple = (0, 0)
    max_n: int = 8
    table: RecurrenceTable = field(init=False, repr=False)
    norms: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.gamma not in (-0.5, 0.5):
            raise InvalidParameter("gamma must be -0.5 or 0.5")
        if self.max_n < 0:
            raise InvalidParameter("max_n must be nonnegative")
        object.__setattr__(self, "variant", tuple(self.variant))
        depth = self.max_n + 2
        weight = variant_weight(self.weight_spec, self.variant, depth)
        table = weight.recurrence(depth)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "norms", np.cumprod(table.b))

    def _check(self, k: int, n: int) -> None:
        if n < 0 or n > self.max_n or k < 0 or k > n:
            raise IndexOutOfRange(f"P_(k={k}, n={n}) outside 0 <= k <= n <= {self.max_n}")

    def values_xy(self, k: int, n: int, x, y):
        """``P_{k,n}`` as a symmetric function of the root pair ``(x, y)`` (vectorized)."""
        self._check(k, n)
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if self.gamma < 0:
            px = eval_monic_all(self.table, n, x)
            py = eval_monic_all(self.table, n, y)
            return px[n] * py[k] + py[n] * px[k]
        return self._divided_difference(k, n + 1, x, y)

    def _divided_difference(self, k: int, top: int, x, y):
        # D_j = (p_j(x) p_k(y) - p_j(y) p_k(x)) / (x - y), advanced by the
        # three-term recurrence; D_{k-1} is minus a Christoffel-Darboux sum.
        a, b, h = self.table.a, self.table.b, self.norms
        px = eval_monic_all(self.table, top, x)
        py = eval_monic_all(self.table, top, y)
        if k == 0:
            d_prev = np.zeros(np.broadcast(x, y).shape)
        else:
            kernel = sum(px[i] * py[i] / h[i] for i in range(k))
            d_prev = -h[k - 1] * kernel
        d = np.zeros_like(d_prev)
        for j in range(k, top):
            bj = b[j] if j > 0 else 0.0
            d_next = (x - a[j]) * d + py[j] * px[k] - bj * d_prev
            d_prev, d = d, d_next
        return d


def eval_P(basis: OmegaBasis, k: int, n: int, u: float, v: float) -> float:
    """Value of ``P_{k,n}`` at the point ``(u, v)`` of the closure of Omega."""
    basis._check(k, n)
    if not in_omega(u, v):
        raise DomainError(f"({u}, {v}) is outside Omega")
    x, y = uv_roots(u, v)
    return float(basis.values_xy(k, n, x, y))


def family_size(family: int, degree: int) -> int:
    n, odd = divmod(degree, 2)
    if family not in (1, 2):
        raise InvalidParameter("family must be 1 or 2")
    if odd:
        return n + 1
    return n + 1 if family == 1 else n


class GBasis:
    """Orthogonal basis for the centrally symmetric weight on G up to ``max_degree``."""

    def __init__(self, weight_spec: WeightSpec1D, gamma: float, max_degree: int = 16):
        if gamma not in (-0.5, 0.5):
            raise InvalidParameter("gamma must be -0.5 or 0.5")
        self.weight_spec = weight_spec
        self.gamma = float(gamma)
        self.max_degree = int(max_degree)
        max_n = max(self.max_degree // 2, 0)
        self.omega = {v: OmegaBasis(weight_spec, gamma, v, max_n) for v in VARIANTS}

    def members(self, degree: int):
        """All ``(family, k)`` pairs of the given degree."""
        return [(fam, k) for fam in (1, 2) for k in range(family_size(fam, degree))]

    def values(self, family: int, k: int, degree: int, x, y):
        """Vectorized ``Q`` at points of G."""
        if degree < 0 or degree > self.max_degree:
            raise IndexOutOfRange(f"degree {degree} outside 0..{self.max_degree}")
        if k < 0 or k >= family_size(family, degree):
            raise IndexOutOfRange(f"k={k} outside family {family} of degree {degree}")
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        r1, r2 = half_angle_roots(x, y)
        n, odd = divmod(degree, 2)
        if not odd:
            if family == 1:
                return self.omega[(0, 0)].values_xy(k, n, r1, r2)
            return (x * x - y * y) * self.omega[(1, 1)].values_xy(k, n - 1, r1, r2)
        if family == 1:
            return (x + y) * self.omega[(0, 1)].values_xy(k, n, r1, r2)
        return (x - y) * self.omega[(1, 0)].values_xy(k, n, r1, r2)


def eval_Q(basis: GBasis, family: int, k: int, degree: int, x: float, y: float) -> float:
    """Value of ``Q`` (family 1 or 2, index k, total degree ``degree``) at ``(x, y)`` in G."""
    from .domain_map import in_g

    if not in_g(x, y):
        raise DomainError(f"({x}, {y}) is not in G")
    return float(basis.values(family, k, degree, x, y))


def laguerre_explicit_even(alpha: float, k: int, n: int, theta: float, phi: float) -> float:
    """Family-1 even-degree Q for the shifted Laguerre weight at ``(cosh theta, cosh phi)``.

    Computed by the generic construction; compare with
    :func:`laguerre_closed_form_even` for the closed Laguerre form.
    """
    if not 0 <= k <= n or theta < 0 or phi < 0:
        raise InvalidParameter("need 0 <= k <= n and theta, phi >= 0")
    basis = GBasis(WeightSpec1D.shifted_laguerre(alpha), -0.5, 2 * n)
    return float(basis.values(1, k, 2 * n, math.cosh(theta), math.cosh(phi)))


def laguerre_closed_form_even(alpha: float, k: int, n: int, theta: float, phi: float,
                              family: int = 1, shifted: bool = True) -> float:
    """Closed Laguerre form of the even-degree Q at ``(cosh theta, cosh phi)``.

    ``shifted=True`` evaluates ``L(cosh(theta -+ phi) - 1)``, the argument the
    identity ``p_n(w_alpha; x) ~ L_n^alpha(x - 1)`` requires; ``shifted=False``
    uses ``L(cosh(theta -+ phi))`` unshifted.  Family 2 uses ``L^(alpha+1)``
    with the prefactor ``x**2 - y**2``.
    """
    c = 1.0 if shifted else 0.0
    xm = math.cosh(theta - phi) - c
    xp = math.cosh(theta + phi) - c
    if family == 1:
        return float(eval_genlaguerre(n, alpha, xm) * eval_genlaguerre(k, alpha, xp)
                     + eval_genlaguerre(k, alpha, xm) * eval_genlaguerre(n, alpha, xp))
    x, y = math.cosh(theta), math.cosh(phi)
    a1 = alpha + 1.0
    return float((x * x - y * y) * (
        eval_genlaguerre(n - 1, a1, xm) * eval_genlaguerre(k, a1, xp)
        + eval_genlaguerre(k, a1, xm) * eval_genlaguerre(n - 1, a1, xp)))


def gram_matrix(basis, degree: int, quad_order: int, degree2: int | None = None) -> np.ndarray:
    """Inner products of the basis members of ``degree`` against those of ``degree2``.

    Uses the product-Gauss oracle inner product of :mod:`minqube.verify`.  For
    an :class:`OmegaBasis` the members of degree n are ``P_{k,n}``, k = 0..n.
    """
    from .verify import integrate_g, integrate_omega

    if degree2 is None:
        degree2 = degree
    if quad_order < 1:
        raise InvalidParameter("quad_order must be positive")

    if isinstance(basis, GBasis):
        rows = basis.members(degree)
        cols = basis.members(degree2)

        def fn(deg, fam, k):
            return lambda x, y: basis.values(fam, k, deg, x, y)

        fr = [fn(degree, *m) for m in rows]
        fc = [fn(degree2, *m) for m in cols]
        integrate = integrate_g
    elif isinstance(basis, OmegaBasis):
        if basis.variant != (0, 0):
            raise InvalidParameter("gram_matrix supports the unmodified Omega basis only")
        fr = [(lambda x, y, k=k: basis.values_xy(k, degree, x, y)) for k in range(degree + 1)]
        fc = [(lambda x, y, k=k: basis.values_xy(k, degree2, x, y)) for k in range(degree2 + 1)]
        integrate = None
    else:
        raise InvalidParameter("basis must be an OmegaBasis or GBasis")

    out = np.empty((len(fr), len(fc)))
    for i, f in enumerate(fr):
        for j, g in enumerate(fc):
            if integrate is None:
                out[i, j] = integrate_omega(basis.weight_spec, basis.gamma,
                                            lambda x, y, f=f, g=g: f(x, y) * g(x, y),
                                            quad_order, roots=True)
            else:
                out[i, j] = integrate(basis.weight_spec, basis.gamma,
                                      lambda x, y, f=f, g=g: f(x, y) * g(x, y), quad_order)
    return out
