"""
One-dimensional orthogonal polynomials on [1, inf).

Everything here works with the monic three-term recurrence

    p_{k+1}(x) = (x - a_k) p_k(x) - b_k p_{k-1}(x),   p_{-1} = 0,  p_0 = 1,

where ``b_0`` is the total mass of the weight.  Gauss rules come from the
Jacobi matrix (Golub-Welsch) and are normalized to unit mass, so that

    c_w * int_1^inf f(x) w(x) dx = sum_k lambda_k f(x_k)

for every polynomial f of degree at most 2n - 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import IndexOutOfRange, InvalidParameter, NumericalFailure

__all__ = [
    "RecurrenceTable",
    "WeightSpec1D",
    "GaussRule1D",
    "shifted_laguerre_recurrence",
    "modified_recurrence",
    "eval_monic",
    "eval_monic_all",
    "gauss_rule",
    "norm_constants",
    "tridiagonal_eigen",
    "shifted_laguerre_moments",
    "FACTOR_X_MINUS_1",
    "FACTOR_X_PLUS_1",
    "FACTOR_X2_MINUS_1",
]

# ascending coefficients
FACTOR_X_MINUS_1 = (-1.0, 1.0)
FACTOR_X_PLUS_1 = (1.0, 1.0)
FACTOR_X2_MINUS_1 = (-1.0, 0.0, 1.0)

_MAX_QL_ITER = 50


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class RecurrenceTable:
    """Monic recurrence coefficients ``a[0..m-1]`` and ``b[0..m-1]``.

    ``b[0]`` is the total mass of the weight and ``b[k]`` for ``k >= 1`` is the
    ratio of consecutive squared norms.
    """

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = _frozen(self.a)
        b = _frozen(self.b)
        if a.ndim != 1 or a.shape != b.shape:
            raise InvalidParameter("a and b must be 1D sequences of equal length")
        if a.size == 0:
            raise InvalidParameter("a recurrence table needs at least one entry")
        if not np.all(np.isfinite(a)) or not np.all(np.isfinite(b)):
            raise InvalidParameter("recurrence coefficients must be finite")
        if np.any(b <= 0):
            raise InvalidParameter("all b_k must be positive")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def m(self) -> int:
        return int(self.a.size)

    def truncated(self, m: int) -> "RecurrenceTable":
        if m > self.m:
            raise IndexOutOfRange(f"table holds {self.m} coefficients, {m} requested")
        return RecurrenceTable(self.a[:m], self.b[:m])


@dataclass(frozen=True, eq=False)
class WeightSpec1D:
    """A weight on [1, inf).

    Either the shifted Laguerre weight ``(x-1)**alpha * exp(-(x-1))`` or a
    custom weight given only through its recurrence table and normalization
    constant ``c_w`` (the reciprocal of its total mass).
    """

    family: str
    alpha: float | None = None
    table: RecurrenceTable | None = None
    c_w: float | None = None
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.family == "shifted_laguerre":
            if self.alpha is None or not self.alpha > -1:
                raise InvalidParameter("alpha must exceed -1")
            object.__setattr__(self, "alpha", float(self.alpha))
            object.__setattr__(self, "c_w", 1.0 / math.gamma(self.alpha + 1.0))
        elif self.family == "custom":
            if self.table is None or self.c_w is None or not self.c_w > 0:
                raise InvalidParameter("custom weight needs a table and c_w > 0")
            mass = self.table.b[0]
            if abs(self.c_w * mass - 1.0) > 1e-14 * max(1.0, abs(self.c_w * mass)) + 4e-16:
                raise InvalidParameter("c_w * b_0 must equal 1")
        else:
            raise InvalidParameter(f"unknown weight family {self.family!r}")

    @classmethod
    def shifted_laguerre(cls, alpha: float) -> "WeightSpec1D":
        return cls("shifted_laguerre", alpha=alpha)

    @classmethod
    def custom(cls, table: RecurrenceTable, c_w: float | None = None) -> "WeightSpec1D":
        if c_w is None:
            c_w = 1.0 / float(table.b[0])
        return cls("custom", table=table, c_w=float(c_w))

    @property
    def capacity(self) -> float:
        """Largest recurrence depth available (``inf`` for closed-form families)."""
        if self.family == "shifted_laguerre":
            return math.inf
        return self.table.m

    def recurrence(self, m: int) -> RecurrenceTable:
        """Recurrence table with exactly ``m`` coefficients."""
        if m < 1:
            raise InvalidParameter("m must be at least 1")
        if self.family == "shifted_laguerre":
            key = ("rec", m)
            if key not in self._cache:
                self._cache[key] = shifted_laguerre_recurrence(self.alpha, m)
            return self._cache[key]
        return self.table.truncated(m)

    def describe(self) -> dict:
        if self.family == "shifted_laguerre":
            return {"family": "shifted_laguerre", "alpha": self.alpha}
        return {
            "family": "custom",
            "a": [float(v) for v in self.table.a],
            "b": [float(v) for v in self.table.b],
        }


@dataclass(frozen=True, eq=False)
class GaussRule1D:
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "nodes", _frozen(self.nodes))
        object.__setattr__(self, "weights", _frozen(self.weights))

    @property
    def n(self) -> int:
        return int(self.nodes.size)

    def __call__(self, f) -> float:
        return float(np.dot(self.weights, f(self.nodes)))


def shifted_laguerre_recurrence(alpha: float, m: int) -> RecurrenceTable:
    """Monic recurrence of ``(x-1)**alpha * exp(-(x-1))`` on [1, inf).

    Examples
    --------
    >>> t = shifted_laguerre_recurrence(0.0, 3)
    >>> t.a.tolist(), t.b.tolist()
    ([2.0, 4.0, 6.0], [1.0, 1.0, 4.0])
    """
    if not alpha > -1:
        raise InvalidParameter("alpha must exceed -1")
    if m < 1:
        raise InvalidParameter("m must be at least 1")
    k = np.arange(m, dtype=float)
    a = 2.0 * k + alpha + 2.0
    b = k * (k + alpha)
    b[0] = math.gamma(alpha + 1.0)
    return RecurrenceTable(a, b)


def eval_monic_all(table: RecurrenceTable, k: int, x):
    """Values ``p_0(x), ..., p_k(x)`` stacked along the first axis.

    Needs ``k <= table.m`` (``p_k`` only uses coefficients up to index k-1).
    Works for scalar or array ``x``.
    """
    if k < 0 or k > table.m:
        raise IndexOutOfRange(f"degree {k} needs a table of capacity {k}, have {table.m}")
    x = np.asarray(x, dtype=float)
    out = np.empty((k + 1,) + x.shape)
    out[0] = 1.0
    if k >= 1:
        out[1] = x - table.a[0]
    for j in range(1, k):
        out[j + 1] = (x - table.a[j]) * out[j] - table.b[j] * out[j - 1]
    return out


def _eval_with_derivative(table: RecurrenceTable, k: int, x):
    x = np.asarray(x, dtype=float)
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    dp_prev = np.zeros_like(x)
    dp = np.zeros_like(x)
    for j in range(k):
        bj = table.b[j] if j > 0 else 0.0
        p_next = (x - table.a[j]) * p - bj * p_prev
        dp_next = p + (x - table.a[j]) * dp - bj * dp_prev
        p_prev, p = p, p_next
        dp_prev, dp = dp, dp_next
    return p, dp


def eval_monic(table: RecurrenceTable, k: int, x):
    """Monic ``p_k(x)`` and its derivative.

    Examples
    --------
    >>> t = shifted_laguerre_recurrence(0.0, 3)
    >>> [float(v) for v in eval_monic(t, 2, 3.0)]
    [-2.0, 0.0]
    """
    if k < 0 or k >= table.m:
        raise IndexOutOfRange(f"index {k} outside table of capacity {table.m}")
    p, dp = _eval_with_derivative(table, k, x)
    if np.ndim(p) == 0:
        return float(p), float(dp)
    return p, dp


def tridiagonal_eigen(diag, offdiag):
    """Eigenvalues and first eigenvector components of a symmetric tridiagonal matrix.

    Implicit QL with Wilkinson shifts, updating only the first row of the
    eigenvector matrix.  ``offdiag[i]`` couples rows i and i+1.

    Returns
    -------
    eigenvalues : ndarray, ascending
    first : ndarray
        First components of the corresponding normalized eigenvectors.
    """
    d = np.array(diag, dtype=float)
    n = d.size
    e = np.zeros(n)
    e[: n - 1] = np.asarray(offdiag, dtype=float)[: n - 1]
    z = np.zeros(n)
    z[0] = 1.0
    eps = np.finfo(float).eps

    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= eps * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1
            if m == l:
                break
            if it == _MAX_QL_ITER:
                raise NumericalFailure(f"QL iteration did not converge for eigenvalue {l}")
            it += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    order = np.argsort(d, kind="stable")
    return d[order], z[order]


def gauss_rule(weight: WeightSpec1D, n: int) -> GaussRule1D:
    """Normalized n-point Gauss rule for ``weight``.

    Nodes are the eigenvalues of the Jacobi matrix, polished by one Newton
    step on p_n; weights are ``c_w * b_0 * v_0**2`` so they sum to one.
    """
    if n < 1:
        raise InvalidParameter("n must be at least 1")
    if n > weight.capacity:
        raise IndexOutOfRange(f"weight recurrence holds {weight.capacity} terms, {n} requested")
    key = ("gauss", n)
    cache = weight._cache
    if key in cache:
        return cache[key]
    table = weight.recurrence(n)
    nodes, first = tridiagonal_eigen(table.a, np.sqrt(table.b[1:]))
    p, dp = _eval_with_derivative(table, n, nodes)
    with np.errstate(divide="ignore", invalid="ignore"):
        step = np.where(dp != 0.0, p / dp, 0.0)
    # only accept corrections far below the node spacing
    spacing = np.min(np.diff(nodes)) if n > 1 else max(1.0, abs(nodes[0]))
    step = np.where(np.abs(step) < 1e-3 * spacing, step, 0.0)
    nodes = nodes - step
    weights = weight.c_w * table.b[0] * first**2
    if not (np.all(np.isfinite(nodes)) and np.all(weights > 0)):
        raise NumericalFailure("Gauss rule produced non-finite nodes or non-positive weights")
    rule = GaussRule1D(nodes, weights)
    cache[key] = rule
    return rule


def norm_constants(weight: WeightSpec1D, k: int) -> float:
    """Squared norm ``h_k = b_0 b_1 ... b_k`` of the monic ``p_k``."""
    if k < 0 or k >= weight.capacity:
        raise IndexOutOfRange(f"index {k} outside recurrence capacity {weight.capacity}")
    table = weight.recurrence(k + 1)
    return float(np.prod(table.b[: k + 1]))


def _check_factor(coeffs: np.ndarray) -> None:
    poly = np.polynomial.Polynomial(coeffs).trim()
    if poly.degree() == 0:
        if poly.coef[0] <= 0:
            raise InvalidParameter("factor must be positive on [1, inf)")
        return
    if poly.coef[-1] <= 0:
        raise InvalidParameter("factor is negative for large x")
    roots = poly.roots()
    real = np.sort(np.real(roots[np.abs(np.imag(roots)) <= 1e-12 * (1 + np.abs(roots))]))
    cuts = np.concatenate(([1.0], real[real > 1.0], [np.inf]))
    probes = []
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        probes.append(lo + 1.0 if np.isinf(hi) else 0.5 * (lo + hi))
    if np.any(poly(np.array(probes)) < 0):
        raise InvalidParameter("factor must be nonnegative on [1, inf)")


def modified_recurrence(base: WeightSpec1D, factor: Sequence[float], m: int) -> RecurrenceTable:
    """Recurrence of ``factor(x) * w(x)`` by the discretized Stieltjes procedure.

    ``factor`` holds ascending polynomial coefficients.  Inner products are
    evaluated with a base Gauss rule of ``m + ceil(deg/2) + 1`` points, which is
    exact for every integrand the procedure forms.

    Examples
    --------
    >>> w0 = WeightSpec1D.shifted_laguerre(0.0)
    >>> t = modified_recurrence(w0, FACTOR_X_PLUS_1, 1)
    >>> round(float(t.a[0]) * 3, 12)
    7.0
    """
    if m < 1:
        raise InvalidParameter("m must be at least 1")
    coeffs = np.asarray(factor, dtype=float)
    _check_factor(coeffs)
    deg = np.polynomial.Polynomial(coeffs).trim().degree()
    size = m + (deg + 1) // 2 + 1
    rule = gauss_rule(base, size)
    x = rule.nodes
    omega = rule.weights / base.c_w * np.polynomial.polynomial.polyval(x, coeffs)

    a = np.empty(m)
    b = np.empty(m)
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    norm_prev = 1.0
    for k in range(m):
        norm = float(np.dot(omega, p * p))
        if not norm > 0:
            raise NumericalFailure(f"Stieltjes norm vanished at step {k}")
        a[k] = float(np.dot(omega, x * p * p)) / norm
        b[k] = norm if k == 0 else norm / norm_prev
        if not b[k] > 0:
            raise NumericalFailure(f"non-positive b_{k} in modified recurrence")
        p_next = (x - a[k]) * p - (b[k] if k > 0 else 0.0) * p_prev
        p_prev, p = p, p_next
        norm_prev = norm
    return RecurrenceTable(a, b)


def shifted_laguerre_moments(alpha: float, d: int) -> np.ndarray:
    """Normalized moments ``c_w int x**j w_alpha(x) dx`` for ``j = 0..d``.

    Uses x = 1 + t with t Gamma(alpha+1)-distributed:
    mu_j = sum_i C(j, i) (alpha+1)(alpha+2)...(alpha+i).
    """
    rising = np.ones(d + 1)
    for i in range(1, d + 1):
        rising[i] = rising[i - 1] * (alpha + i)
    mu = np.empty(d + 1)
    for j in range(d + 1):
        mu[j] = sum(math.comb(j, i) * rising[i] for i in range(j + 1))
    return mu
