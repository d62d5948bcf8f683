"""
Ground truth for the cubature rules and the checks built on it.

Two independent routes to integrals against the G and Omega weights:

* product-Gauss oracles.  An integral over Omega is half of an integral over
  [1, inf)^2 of ``f(x1 + x2, x1 x2) w(x1) w(x2) |x1 - x2|**(2 gamma + 1)``.
  For gamma = +-1/2 the last factor is polynomial, so a large enough product
  Gauss rule is exact.  Integrals over G reduce to Omega after averaging the
  integrand over the four images ``(x, y), (y, x), (-x, -y), (-y, -x)``.
* brute force.  Globally adaptive product Gauss-Legendre integration of the
  closed-form shifted Laguerre density over a truncated domain, written in
  hyperbolic coordinates so the endpoint singularities disappear.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .cubature import CubatureRule2D, apply, attains_bound, lower_bound_nodes
from .errors import InvalidParameter, NumericalFailure, SearchFailure
from .opbasis2d import GBasis, OmegaBasis
from .orthopoly1d import WeightSpec1D, eval_monic_all, gauss_rule

__all__ = [
    "DensityEvaluator",
    "integrate_omega",
    "integrate_g",
    "oracle_moment_omega",
    "oracle_moment_g",
    "oracle_moment_g_bruteforce",
    "bruteforce_moments_g",
    "ExactnessReport",
    "exactness_report",
    "Witness",
    "sharpness_check",
    "CommonZeroResult",
    "common_zero_check",
    "closed_form_discrepancy",
    "verify_rule",
]


def _check_gamma(gamma):
    if gamma not in (-0.5, 0.5):
        raise InvalidParameter("oracles need gamma = -0.5 or 0.5")


class DensityEvaluator:
    """Closed-form shifted Laguerre densities on Omega and on G.

    ``omega(u, v) = (v - u + 1)**alpha * exp(-u + 2) * (u**2 - 4 v)**gamma``

    ``g(x, y) = 4**gamma |x - y|**(2 alpha) (x**2 - 1)**gamma (y**2 - 1)**gamma
    |x**2 - y**2| exp(-2 x y + 2)``

    The constant is ``exp(+2)``: it is what ``w_alpha(x1) w_alpha(x2)`` with
    ``x1 + x2 = u`` produces.  Neither density is normalized.
    """

    def __init__(self, alpha: float, gamma: float):
        if not alpha > -1:
            raise InvalidParameter("alpha must exceed -1")
        _check_gamma(gamma)
        self.alpha = float(alpha)
        self.gamma = float(gamma)
        self.c_w = 1.0 / math.gamma(self.alpha + 1.0)

    def omega(self, u, v):
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        disc = np.maximum(u * u - 4.0 * v, 0.0)
        base = np.maximum(v - u + 1.0, 0.0)
        with np.errstate(divide="ignore"):
            return base**self.alpha * np.exp(-u + 2.0) * disc**self.gamma

    def g(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            return (4.0**self.gamma * np.abs(x - y) ** (2 * self.alpha)
                    * (x * x - 1.0) ** self.gamma * (y * y - 1.0) ** self.gamma
                    * np.abs(x * x - y * y) * np.exp(-2.0 * x * y + 2.0))

    def g_hyperbolic(self, a, b):
        """``g(cosh a, cosh b) * sinh a * sinh b`` (density times Jacobian), finite at 0."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        x, y = np.cosh(a), np.cosh(b)
        p = 2.0 * self.gamma + 1.0
        return (4.0**self.gamma * np.abs(x - y) ** (2 * self.alpha)
                * np.sinh(a) ** p * np.sinh(b) ** p
                * np.abs(x * x - y * y) * np.exp(-2.0 * x * y + 2.0))


# ---------------------------------------------------------------------------
# product Gauss oracles


@dataclass(frozen=True, eq=False)
class _ProductGrid:
    x1: np.ndarray
    x2: np.ndarray
    mass: np.ndarray  # 0.5 * lambda_a * lambda_b
    s: np.ndarray
    t: np.ndarray


def _product_grid(weight: WeightSpec1D, order: int) -> _ProductGrid:
    key = ("product_grid", order)
    if key in weight._cache:
        return weight._cache[key]
    rule = gauss_rule(weight, order)
    x1, x2 = np.meshgrid(rule.nodes, rule.nodes, indexing="ij")
    lam = np.outer(rule.weights, rule.weights)
    x1, x2, lam = x1.ravel(), x2.ravel(), lam.ravel()
    # half-angle point: t**2 = (1 + x1 x2 + r)/2, s**2 = (1 + x1 x2 - r)/2 with
    # r = sqrt((x1^2-1)(x2^2-1)); x1 x2 - r is rewritten to avoid cancellation
    r = np.sqrt((x1 * x1 - 1.0) * (x2 * x2 - 1.0))
    prod = x1 * x2
    t = np.sqrt(0.5 * (1.0 + prod + r))
    s = np.sqrt(0.5 * (1.0 + (x1 * x1 + x2 * x2 - 1.0) / (prod + r)))
    grid = _ProductGrid(x1, x2, 0.5 * lam, s, t)
    weight._cache[key] = grid
    return grid


def integrate_omega(weight: WeightSpec1D, gamma: float, f: Callable, order: int,
                    roots: bool = False) -> float:
    """``c_w**2 * int_Omega f(u, v) W_gamma(u, v) du dv`` by an ``order``-point product rule.

    With ``roots=True`` ``f`` receives the root pair ``(x1, x2)`` instead of ``(u, v)``.
    """
    _check_gamma(gamma)
    grid = _product_grid(weight, order)
    factor = np.ones_like(grid.x1) if gamma < 0 else (grid.x1 - grid.x2) ** 2
    if roots:
        vals = f(grid.x1, grid.x2)
    else:
        vals = f(grid.x1 + grid.x2, grid.x1 * grid.x2)
    vals = np.broadcast_to(np.asarray(vals, dtype=float), grid.x1.shape)
    return math.fsum(grid.mass * factor * vals)


def _orbit_average(f: Callable, s, t):
    return 0.25 * (f(s, t) + f(t, s) + f(-s, -t) + f(-t, -s))


def integrate_g(weight: WeightSpec1D, gamma: float, f: Callable, order: int) -> float:
    """``c_w**2 * int_G f(x, y) W_gamma(x, y) dx dy`` by an ``order``-point product rule."""
    _check_gamma(gamma)
    grid = _product_grid(weight, order)
    factor = np.ones_like(grid.x1) if gamma < 0 else (grid.x1 - grid.x2) ** 2
    vals = np.broadcast_to(np.asarray(_orbit_average(f, grid.s, grid.t), dtype=float),
                           grid.x1.shape)
    return math.fsum(grid.mass * factor * vals)


def oracle_moment_omega(weight: WeightSpec1D, gamma: float, i: int, j: int) -> float:
    """``c_w**2 * int_Omega u**i v**j W_gamma``."""
    _check_gamma(gamma)
    if i < 0 or j < 0:
        raise InvalidParameter("exponents must be nonnegative")
    order = math.ceil((i + 2 * j + 3) / 2) + 2
    return integrate_omega(weight, gamma, lambda u, v: u**i * v**j, order)


def oracle_moment_g(weight: WeightSpec1D, gamma: float, i: int, j: int) -> float:
    """``c_w**2 * int_G x**i y**j W_gamma``; zero for odd ``i + j``."""
    _check_gamma(gamma)
    if i < 0 or j < 0:
        raise InvalidParameter("exponents must be nonnegative")
    if (i + j) % 2:
        return 0.0
    return integrate_g(weight, gamma, lambda x, y: x**i * y**j, i + j + 3)


# ---------------------------------------------------------------------------
# brute force


def _adaptive_2d(func: Callable, box, tol: float, budget: int = 10**6,
                 order: int = 12, low: int = 8, init: tuple[int, int] = (4, 8)):
    """Globally adaptive cubature of a vector-valued ``func(p, q) -> (ncomp, npts)``.

    Each rectangle is integrated by ``order`` x ``order`` Gauss-Legendre; the
    error estimate is the difference to ``low`` x ``low``.  The rectangle with
    the largest estimate is split into four until the summed estimate falls
    below ``tol``.
    """
    hi_x, hi_w = np.polynomial.legendre.leggauss(order)
    lo_x, lo_w = np.polynomial.legendre.leggauss(low)

    def cell(p0, p1, q0, q1):
        hp, hq = 0.5 * (p1 - p0), 0.5 * (q1 - q0)
        mp, mq = 0.5 * (p1 + p0), 0.5 * (q1 + q0)

        def rule(x, w):
            P, Q = np.meshgrid(mp + hp * x, mq + hq * x, indexing="ij")
            W = np.outer(w, w).ravel() * hp * hq
            return func(P.ravel(), Q.ravel()) @ W

        fine = rule(hi_x, hi_w)
        err = float(np.max(np.abs(fine - rule(lo_x, lo_w))))
        return fine, err

    (p0, p1), (q0, q1) = box
    heap = []
    total = None
    err_total = 0.0
    count = 0
    ps = np.linspace(p0, p1, init[0] + 1)
    qs = np.linspace(q0, q1, init[1] + 1)
    for a0, a1 in zip(ps[:-1], ps[1:]):
        for b0, b1 in zip(qs[:-1], qs[1:]):
            val, err = cell(a0, a1, b0, b1)
            total = val if total is None else total + val
            err_total += err
            heapq.heappush(heap, (-err, count, (a0, a1, b0, b1), val))
            count += 1
    while err_total > tol:
        if count >= budget:
            raise NumericalFailure(f"adaptive budget of {budget} cells exhausted "
                                   f"(error estimate {err_total:.3g})")
        negerr, _, (a0, a1, b0, b1), val = heapq.heappop(heap)
        total = total - val
        err_total += negerr
        am, bm = 0.5 * (a0 + a1), 0.5 * (b0 + b1)
        for c in ((a0, am, b0, bm), (am, a1, b0, bm), (a0, am, bm, b1), (am, a1, bm, b1)):
            v, e = cell(*c)
            total = total + v
            err_total += e
            heapq.heappush(heap, (-e, count, c, v))
            count += 1
    return total, err_total, count


def bruteforce_moments_g(alpha: float, gamma: float, max_degree: int,
                         tail_cut: float = 40.0, tol: float = 1e-8) -> dict:
    """All ``c_w**2 int_G x**i y**j W_{alpha,gamma}`` with ``i + j <= max_degree``.

    Integrates the closed-form density over ``[1, tail_cut]**2`` in hyperbolic
    coordinates ``x = cosh(a)``, ``y = cosh(b)``, folded onto ``a <= b`` and
    mapped to a rectangle by ``a = tau * b``.  The negative sheet contributes
    ``(-1)**(i+j)`` times the positive one.
    """
    dens = DensityEvaluator(alpha, gamma)
    if not tail_cut > 1:
        raise InvalidParameter("tail_cut must exceed 1")
    tail = tail_cut ** (max_degree + alpha + 2) * math.exp(-2.0 * tail_cut + 2.0)
    if tail * dens.c_w**2 >= tol / 10:
        raise InvalidParameter(f"tail_cut {tail_cut} leaves a tail bound {tail:.3g} above tol/10")
    pairs = [(i, d - i) for d in range(max_degree + 1) for i in range(d + 1)]
    ei = np.array([p[0] for p in pairs])[:, None]
    ej = np.array([p[1] for p in pairs])[:, None]

    def integrand(tau, b):
        a = tau * b
        x, y = np.cosh(a), np.cosh(b)
        base = dens.g_hyperbolic(a, b) * b
        return (x[None, :] ** ei * y[None, :] ** ej + x[None, :] ** ej * y[None, :] ** ei) * base

    b_max = math.acosh(tail_cut)
    # positive sheet carries half of the tolerance; the sheet sum can double it
    total, _, _ = _adaptive_2d(integrand, ((0.0, 1.0), (0.0, b_max)), tol / (4 * dens.c_w**2))
    out = {}
    for (i, j), val in zip(pairs, total):
        sign = 1.0 + (-1.0) ** (i + j)
        out[(i, j)] = sign * dens.c_w**2 * float(val)
    return out


def oracle_moment_g_bruteforce(weight: WeightSpec1D, gamma: float, i: int, j: int,
                               tail_cut: float = 40.0, tol: float = 1e-8) -> float:
    """Single moment from :func:`bruteforce_moments_g`; shifted Laguerre weights only."""
    if weight.family != "shifted_laguerre":
        raise InvalidParameter("brute force needs the closed-form shifted Laguerre density")
    return bruteforce_moments_g(weight.alpha, gamma, i + j, tail_cut, tol)[(i, j)]


# ---------------------------------------------------------------------------
# exactness and sharpness


@dataclass
class ExactnessReport:
    rule: dict
    max_degree_tested: int
    achieved_degree: int
    rel_tol: float
    basis: str
    errors: list = field(default_factory=list)
    passed: list = field(default_factory=list)
    witness: dict | None = None

    def status(self, degree: int) -> bool:
        return bool(self.passed[degree])

    def to_dict(self) -> dict:
        return asdict(self)


def _rule_identity(rule: CubatureRule2D) -> dict:
    return {
        "domain": rule.domain,
        "gamma": rule.gamma,
        "n": rule.n,
        "claimed_degree": rule.claimed_degree,
        "weight": rule.weight_spec.describe(),
        "nodes": len(rule),
    }


def _orthonormal_table(weight: WeightSpec1D, degree: int, x):
    table = weight.recurrence(max(degree, 1))
    vals = eval_monic_all(table, degree, x)
    norms = np.sqrt(np.cumprod(table.b))[: degree + 1] if degree < table.m else None
    if norms is None:
        ext = weight.recurrence(degree + 1)
        norms = np.sqrt(np.cumprod(ext.b))[: degree + 1]
    return vals / norms.reshape((-1,) + (1,) * np.ndim(x))


def _test_values(rule: CubatureRule2D, degree: int, basis: str, x, y):
    """Rows: test functions of total degree ``degree`` evaluated at ``(x, y)``."""
    if basis == "monomial":
        return [(f"x^{a} y^{degree - a}", x**a * y ** (degree - a)) for a in range(degree + 1)]
    phx = _orthonormal_table(rule.weight_spec, degree, x)
    phy = _orthonormal_table(rule.weight_spec, degree, y)
    return [(f"phi_{a}(x) phi_{degree - a}(y)", phx[a] * phy[degree - a]) for a in range(degree + 1)]


def _oracle_order(max_degree: int) -> int:
    return max_degree // 2 + 3


def exactness_report(rule: CubatureRule2D, max_degree: int, rel_tol: float = 1e-8,
                     basis: str | None = None) -> ExactnessReport:
    """Test the rule on every total degree ``0..max_degree``.

    Each degree is probed with the functions ``phi_a(x) phi_b(y)``, ``a + b = d``:
    monomials in ``(u, v)`` on Omega, products of orthonormal 1D polynomials of
    the base weight on G (``basis`` overrides).  The error of one probe is
    ``|rule - oracle| / max(|oracle|, scale)`` where ``scale`` is the larger of
    the absolute sums ``sum |w_i f_i|`` of the rule and of the oracle.
    """
    if max_degree < 0:
        raise InvalidParameter("max_degree must be nonnegative")
    if basis is None:
        basis = "monomial"
    if basis not in ("monomial", "orthonormal"):
        raise InvalidParameter(f"unknown test basis {basis!r}")

    weight, gamma = rule.weight_spec, rule.gamma
    grid = _product_grid(weight, _oracle_order(max_degree))
    gfac = np.ones_like(grid.x1) if gamma < 0 else (grid.x1 - grid.x2) ** 2
    omega_mass = grid.mass * gfac
    nx, ny = rule.nodes[:, 0], rule.nodes[:, 1]
    if rule.domain == "g":
        images = [(grid.s, grid.t), (grid.t, grid.s), (-grid.s, -grid.t), (-grid.t, -grid.s)]
        oracle_pts = (np.concatenate([p[0] for p in images]),
                      np.concatenate([p[1] for p in images]))
        oracle_w = np.tile(0.25 * omega_mass, 4)
    else:
        oracle_pts = (grid.x1 + grid.x2, grid.x1 * grid.x2)
        oracle_w = omega_mass

    report = ExactnessReport(_rule_identity(rule), max_degree, -1, rel_tol, basis)
    prefix = True
    for d in range(max_degree + 1):
        rule_rows = _test_values(rule, d, basis, nx, ny)
        oracle_rows = _test_values(rule, d, basis, *oracle_pts)
        worst, worst_case = 0.0, None
        for (label, fr), (_, fo) in zip(rule_rows, oracle_rows):
            rv = math.fsum(rule.weights * fr)
            ov = math.fsum(oracle_w * fo)
            scale = max(math.fsum(np.abs(rule.weights * fr)), math.fsum(np.abs(oracle_w * fo)))
            denom = max(abs(ov), scale)
            err = abs(rv - ov) / denom if denom > 0 else 0.0
            if err >= worst:
                worst, worst_case = err, (label, rv, ov)
        ok = worst <= rel_tol
        report.errors.append(worst)
        report.passed.append(ok)
        if prefix and ok:
            report.achieved_degree = d
        elif prefix:
            prefix = False
            label, rv, ov = worst_case
            report.witness = {"degree": d, "function": label, "rule_value": rv,
                              "oracle_value": ov, "relative_error": worst}
    return report


@dataclass
class Witness:
    degree: int
    description: str
    rule_value: float
    oracle_value: float
    relative_error: float
    func: Callable = field(repr=False, compare=False)

    def to_dict(self) -> dict:
        return {"degree": self.degree, "function": self.description,
                "rule_value": self.rule_value, "oracle_value": self.oracle_value,
                "relative_error": self.relative_error}


def _zero_family(rule: CubatureRule2D, degree: int):
    """The orthogonal polynomials of ``degree`` expected to vanish at the nodes.

    Returns ``(labels, callables)``; G rules use family-1 Q, Omega rules use P.
    """
    if rule.domain == "g":
        basis = GBasis(rule.weight_spec, rule.gamma, degree)
        ks = range(degree // 2 + 1)
        labels = [f"1Q_{{{k},{degree}}}" for k in ks]
        funcs = [(lambda x, y, k=k: basis.values(1, k, degree, x, y)) for k in ks]
        return labels, funcs
    omega = OmegaBasis(rule.weight_spec, rule.gamma, (0, 0), degree)
    from .domain_map import uv_roots

    def make(k):
        def f(u, v):
            u = np.asarray(u, dtype=float)
            v = np.asarray(v, dtype=float)
            flat = [uv_roots(a, b) for a, b in zip(u.ravel(), v.ravel())]
            x = np.array([p[0] for p in flat]).reshape(u.shape)
            y = np.array([p[1] for p in flat]).reshape(u.shape)
            return omega.values_xy(k, degree, x, y)
        return f

    return [f"P_{{{k},{degree}}}" for k in range(degree + 1)], [make(k) for k in range(degree + 1)]


def sharpness_check(rule: CubatureRule2D, report: ExactnessReport | None = None,
                    rel_tol: float = 1e-8) -> Witness:
    """A polynomial of degree ``achieved_degree + 1`` the rule integrates wrongly.

    First choice is the square of the lowest orthogonal polynomial of half
    that degree (zero at every node, positive integral); otherwise the worst
    probe from the exactness report.
    """
    if report is None:
        report = exactness_report(rule, rule.claimed_degree + 2, rel_tol)
    target = report.achieved_degree + 1
    margin = 1e3 * report.rel_tol

    if target % 2 == 0 and target > 0:
        half = target // 2
        if rule.domain == "g":
            labels, funcs = _zero_family(rule, half)
            integ = integrate_g
        else:
            labels, funcs = _zero_family(rule, half)
            integ = integrate_omega
        f0 = funcs[0]

        def sq(x, y, f0=f0):
            return f0(x, y) ** 2

        rv = apply(rule, sq)
        ov = integ(rule.weight_spec, rule.gamma, sq, target // 2 + 4)
        err = abs(rv - ov) / max(abs(ov), abs(rv), 1e-300)
        if err >= margin:
            return Witness(target, f"({labels[0]})^2", rv, ov, err, sq)

    w = report.witness
    if w is not None and w["degree"] == target and w["relative_error"] >= margin:
        return Witness(target, w["function"], w["rule_value"], w["oracle_value"],
                       w["relative_error"], None)
    raise SearchFailure(f"no failing polynomial of degree {target} found; "
                        "the rule may exceed its measured degree")


# ---------------------------------------------------------------------------
# common zeros


@dataclass
class CommonZeroResult:
    residual: float
    count: int
    expected_count: int
    degree: int
    per_polynomial: list

    def to_dict(self) -> dict:
        return asdict(self)


def default_zero_degree(rule: CubatureRule2D) -> int:
    if rule.domain == "g":
        return 2 * rule.n if rule.gamma < 0 else 2 * (rule.n - 1)
    return rule.n if rule.gamma < 0 else rule.n - 1


def common_zero_check(rule: CubatureRule2D, degree: int | None = None) -> CommonZeroResult:
    """Largest scaled value of the degree-``degree`` orthogonal polynomials at the nodes.

    Scaling is ``1 + max |P|`` over a reference grid: the product Gauss points
    of order ``n + 3`` mapped into the domain.  ``expected_count`` is
    ``floor((degree + 1)/2) + 1`` for G and ``degree + 1`` for Omega.
    """
    if degree is None:
        degree = default_zero_degree(rule)
    labels, funcs = _zero_family(rule, degree)
    grid = _product_grid(rule.weight_spec, rule.n + 3)
    if rule.domain == "g":
        ref = (np.concatenate([grid.s, -grid.s]), np.concatenate([grid.t, -grid.t]))
        expected = (degree + 1) // 2 + 1
    else:
        ref = (grid.x1 + grid.x2, grid.x1 * grid.x2)
        expected = degree + 1
    per = []
    for label, f in zip(labels, funcs):
        at_nodes = np.max(np.abs(f(rule.nodes[:, 0], rule.nodes[:, 1])))
        scale = 1.0 + np.max(np.abs(f(*ref)))
        per.append({"polynomial": label, "residual": float(at_nodes / scale)})
    residual = max(p["residual"] for p in per)
    return CommonZeroResult(residual, len(per), expected, degree, per)


# ---------------------------------------------------------------------------
# closed Laguerre form cross-check


def closed_form_discrepancy(alpha: float, n: int, samples: int = 7, seed: int = 0) -> dict:
    """Compare the generic even-degree Q with closed Laguerre expressions.

    For each reading of the Laguerre argument (``cosh(...) - 1`` and
    ``cosh(...)``) the best constant multiple of the closed form is fitted to
    the generic values over random ``(theta, phi)``; the relative residual of
    that fit is reported per ``k``.  A residual near machine precision means
    the two agree up to normalization.
    """
    from .opbasis2d import laguerre_closed_form_even

    rng = np.random.default_rng(seed)
    pts = rng.uniform(0.05, 2.0, size=(samples, 2))
    out = {"alpha": alpha, "n": n, "family1": {}, "family2": {}}
    basis = GBasis(WeightSpec1D.shifted_laguerre(alpha), -0.5, 2 * n)
    for family, ks in ((1, range(n + 1)), (2, range(n))):
        for k in ks:
            gen = np.array([float(basis.values(family, k, 2 * n, math.cosh(a), math.cosh(b)))
                            for a, b in pts])
            row = {}
            for name, shifted in (("shifted", True), ("unshifted", False)):
                lit = np.array([laguerre_closed_form_even(alpha, k, n, a, b, family, shifted)
                                for a, b in pts])
                denom = float(lit @ lit)
                c = float(gen @ lit) / denom if denom > 0 else 0.0
                resid = float(np.linalg.norm(gen - c * lit) / max(np.linalg.norm(gen), 1e-300))
                row[name] = {"scale": c, "relative_residual": resid}
            out[f"family{family}"][k] = row
    return out


# ---------------------------------------------------------------------------
# one-shot verification


def expected_degree(rule: CubatureRule2D) -> int:
    """Degree the construction certifies: ``4n-1``/``2n-1`` (gamma=-1/2), ``4n-5``/``2n-3`` (+1/2)."""
    if rule.domain == "g":
        return 4 * rule.n - 1 if rule.gamma < 0 else 4 * rule.n - 5
    return 2 * rule.n - 1 if rule.gamma < 0 else 2 * rule.n - 3


def verify_rule(rule: CubatureRule2D, max_degree: int | None = None,
                rel_tol: float = 1e-8) -> dict:
    """Exactness, bound attainment, common zeros and sharpness in one record."""
    if max_degree is None:
        max_degree = max(rule.claimed_degree, expected_degree(rule)) + 2
    report = exactness_report(rule, max_degree, rel_tol)
    verified = rule.with_verified_degree(report.achieved_degree)
    try:
        witness = sharpness_check(verified, report, rel_tol).to_dict()
    except SearchFailure:
        witness = None
    zeros = common_zero_check(rule)
    deg = report.achieved_degree
    bound = lower_bound_nodes(deg, rule.domain == "g") if deg >= 1 and deg % 2 else None
    return {
        "domain": rule.domain,
        "gamma": rule.gamma,
        "n": rule.n,
        "weight": rule.weight_spec.describe(),
        "node_count": len(rule),
        "claimed_degree": rule.claimed_degree,
        "achieved_degree": deg,
        "expected_degree": expected_degree(rule),
        "lower_bound_nodes": bound,
        "attains_lower_bound": attains_bound(verified),
        "common_zero_residual": zeros.residual,
        "common_zero_count": zeros.count,
        "sharpness_witness": witness,
        "per_degree_error": report.errors,
        "rel_tol": rel_tol,
    }
