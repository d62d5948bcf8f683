"""
Coordinates on the three regions involved in the construction.

* the triangle  T = {1 < x < y}                (positive sheet, ordered pairs)
* the region    Omega = {0 <= u-1 <= v <= u**2/4}
* the region    G = (-inf, -1]^2  U  [1, inf)^2

``(x, y) -> (x + y, x y)`` maps T onto Omega, and the half-angle map
``(s, t) -> (2 s t, s**2 + t**2 - 1)`` maps every quarter of G onto Omega.
Membership tests use closed inequalities with slack ``1e-12 * (1 + u**2)``.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import DomainError, InvalidParameter

__all__ = [
    "OmegaPoint",
    "GPoint",
    "in_omega",
    "in_g",
    "in_triangle",
    "sym_to_uv",
    "uv_roots",
    "half_angle_to_uv",
    "half_angle_roots",
    "acosh_stable",
    "group_images",
    "omega_boundary",
]


class OmegaPoint(NamedTuple):
    u: float
    v: float


class GPoint(NamedTuple):
    x: float
    y: float


def _slack(u) -> float:
    return 1e-12 * (1.0 + u * u)


def in_omega(u: float, v: float) -> bool:
    tol = _slack(u)
    return (u - 1.0 >= -tol) and (v - (u - 1.0) >= -tol) and (u * u / 4.0 - v >= -tol)


def in_g(x: float, y: float) -> bool:
    tol = 1e-12
    return (x >= 1.0 - tol and y >= 1.0 - tol) or (x <= -1.0 + tol and y <= -1.0 + tol)


def in_triangle(x: float, y: float) -> bool:
    return 1.0 < x < y


def sym_to_uv(x: float, y: float) -> OmegaPoint:
    """Elementary symmetric functions ``(x + y, x y)`` of a point of [1, inf)^2."""
    if x < 1.0 or y < 1.0:
        raise DomainError(f"({x}, {y}) is not in [1, inf)^2")
    return OmegaPoint(x + y, x * y)


def uv_roots(u: float, v: float) -> tuple[float, float]:
    """The two roots ``x <= y`` of ``z**2 - u z + v``.

    The larger root avoids cancellation; the smaller one is ``v / larger``.
    """
    disc = u * u - 4.0 * v
    if disc < -1e-12 * u * u:
        raise DomainError(f"({u}, {v}) has complex preimage (u^2 - 4v = {disc})")
    root = math.sqrt(max(disc, 0.0))
    big = 0.5 * (u + math.copysign(root, u))
    if big == 0.0:
        return 0.0, 0.0
    small = v / big
    return (small, big) if small <= big else (big, small)


def half_angle_roots(s, t):
    """Preimage ``(x1, x2)`` with ``x1 >= x2`` of the half-angle point ``(s, t)``.

    ``x1 + x2 = 2 s t`` and ``x1 x2 = s**2 + t**2 - 1``.  With
    ``s = cosh(a)``, ``t = cosh(b)`` these are ``cosh(a + b)`` and
    ``cosh(a - b)``.  Computed as ``|s t| +- sqrt((s**2-1)(t**2-1))`` without
    forming ``u**2 - 4v``.  Vectorized; no domain check.
    """
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    prod = np.abs(s * t)
    root = np.sqrt(np.maximum((s * s - 1.0) * (t * t - 1.0), 0.0))
    x1 = prod + root
    x2 = (s * s + t * t - 1.0) / x1
    return x1, x2


def half_angle_to_uv(s: float, t: float) -> OmegaPoint:
    """``(2 s t, s**2 + t**2 - 1)``; constant on each orbit of swaps and sign flips."""
    if not in_g(s, t):
        raise DomainError(f"({s}, {t}) is not in G")
    return OmegaPoint(2.0 * s * t, s * s + t * t - 1.0)


def acosh_stable(x: float) -> float:
    """``acosh(x)`` keeping relative accuracy as ``x -> 1``."""
    if x < 1.0 - 1e-12:
        raise DomainError(f"acosh undefined for {x} < 1")
    delta = max(x - 1.0, 0.0)
    return math.log1p(delta + math.sqrt(delta * (delta + 2.0)))


def group_images(x: float, y: float) -> list[GPoint]:
    """Images of ``(x, y)`` under swap and central reflection, deduplicated.

    Order is ``(x, y), (y, x), (-x, -y), (-y, -x)``.
    """
    out: list[GPoint] = []
    for p in ((x, y), (y, x), (-x, -y), (-y, -x)):
        if p not in out:
            out.append(GPoint(*p))
    return out


def omega_boundary(n_samples: int, u_max: float) -> dict[str, np.ndarray]:
    """Sampled boundary curves of Omega for ``u`` in ``[2, u_max]``.

    Returns ``{"line": (n, 2) array, "parabola": (n, 2) array}`` with columns
    ``u, v``.  The line ``v = u - 1`` and the parabola ``v = u**2/4`` touch at
    ``(2, 1)`` only.
    """
    if n_samples < 2:
        raise InvalidParameter("n_samples must be at least 2")
    if not u_max > 2.0:
        raise InvalidParameter("u_max must exceed 2")
    u = np.linspace(2.0, u_max, n_samples)
    return {
        "line": np.column_stack([u, u - 1.0]),
        "parabola": np.column_stack([u, u * u / 4.0]),
    }
