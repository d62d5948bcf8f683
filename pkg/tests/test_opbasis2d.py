import math

import numpy as np
import pytest

from minqube.errors import DomainError, IndexOutOfRange, InvalidParameter
from minqube.opbasis2d import (
    GBasis,
    OmegaBasis,
    eval_P,
    eval_Q,
    family_size,
    gram_matrix,
    laguerre_explicit_even,
    laguerre_closed_form_even,
    variant_weight,
)
from minqube.orthopoly1d import WeightSpec1D


def random_g_points(rng, size):
    x = rng.uniform(1.0, 6.0, size)
    y = rng.uniform(1.0, 6.0, size)
    sign = rng.choice([-1.0, 1.0], size)
    return sign * x, sign * y


def test_eval_P_examples(w0):
    b = OmegaBasis(w0, -0.5, max_n=2)
    for u, v in [(6, 7), (5, 6), (4, 4)]:
        assert eval_P(b, 0, 1, u, v) == pytest.approx(u - 4, abs=1e-13)
    assert eval_P(b, 1, 1, 6, 7) == pytest.approx(-2.0, abs=1e-13)
    bp = OmegaBasis(w0, 0.5, max_n=2)
    assert eval_P(bp, 0, 0, 6, 7) == pytest.approx(1.0, abs=1e-14)
    for variant in [(1, 0), (0, 1), (1, 1)]:
        assert OmegaBasis(w0, 0.5, variant, 1).values_xy(0, 0, 3.0, 2.0) == pytest.approx(1.0)


def test_eval_P_errors(w0):
    b = OmegaBasis(w0, -0.5, max_n=2)
    with pytest.raises(DomainError):
        eval_P(b, 0, 1, 4, 5)
    with pytest.raises(IndexOutOfRange):
        eval_P(b, 2, 1, 6, 7)
    with pytest.raises(IndexOutOfRange):
        eval_P(b, 0, 3, 6, 7)
    with pytest.raises(InvalidParameter):
        OmegaBasis(w0, 0.0)


@pytest.mark.parametrize("k", [0, 1])
def test_eval_Q_common_zero_example(w0, k):
    b = GBasis(w0, -0.5, 2)
    assert eval_Q(b, 1, k, 2, 1.0, 2.0) == pytest.approx(0.0, abs=1e-13)


def test_eval_Q_constant_and_errors(w0):
    # symmetric sum p_0 p_0 + p_0 p_0 = 2 for gamma = -1/2; divided difference = 1
    for gamma, const in ((-0.5, 2.0), (0.5, 1.0)):
        b = GBasis(w0, gamma, 2)
        for x, y in [(3.0, 1.5), (-2.0, -7.0)]:
            assert eval_Q(b, 1, 0, 0, x, y) == pytest.approx(const)
    b = GBasis(w0, -0.5, 2)
    with pytest.raises(DomainError):
        eval_Q(b, 1, 0, 2, 1.0, -2.0)
    with pytest.raises(IndexOutOfRange):
        eval_Q(b, 2, 1, 2, 1.0, 2.0)
    with pytest.raises(IndexOutOfRange):
        eval_Q(b, 1, 0, 3, 1.0, 2.0)


def test_family_sizes_fill_the_space():
    # each degree d contributes d + 1 orthogonal polynomials
    for d in range(12):
        assert family_size(1, d) + family_size(2, d) == d + 1


def test_variant_weight_shift_is_exact(w0):
    v = variant_weight(w0, (1, 0), 3)
    assert v.family == "shifted_laguerre" and v.alpha == 1.0
    with pytest.raises(InvalidParameter):
        variant_weight(w0, (2, 0), 3)


def test_divided_difference_matches_direct_formula(w0, rng):
    b = OmegaBasis(w0, 0.5, max_n=6)
    from minqube.orthopoly1d import eval_monic_all

    x = rng.uniform(1, 8, 20)
    y = x + rng.uniform(0.5, 3, 20)
    px = eval_monic_all(b.table, 7, x)
    py = eval_monic_all(b.table, 7, y)
    for n in range(7):
        for k in range(n + 1):
            direct = (px[n + 1] * py[k] - py[n + 1] * px[k]) / (x - y)
            np.testing.assert_allclose(b.values_xy(k, n, x, y), direct, rtol=1e-10,
                                       atol=1e-10 * np.max(np.abs(direct)))


def test_divided_difference_on_the_diagonal(w0):
    # at x = y the quotient becomes a derivative expression; it must stay finite and continuous
    b = OmegaBasis(w0, 0.5, max_n=4)
    on = b.values_xy(1, 3, 3.0, 3.0)
    near = b.values_xy(1, 3, 3.0, 3.0 + 1e-7)
    assert np.isfinite(on) and on == pytest.approx(float(near), rel=1e-6)


@pytest.mark.parametrize("gamma", [-0.5, 0.5])
def test_parity(w0, gamma, rng):
    b = GBasis(w0, gamma, 7)
    x, y = random_g_points(rng, 30)
    for d in range(8):
        for fam, k in b.members(d):
            q = b.values(fam, k, d, x, y)
            scale = 1e-10 * (1 + np.max(np.abs(q)))
            refl = b.values(fam, k, d, -x, -y)
            swap = b.values(fam, k, d, y, x)
            np.testing.assert_allclose(refl, q if d % 2 == 0 else -q, atol=scale)
            swap_sign = 1 if fam == 1 else -1
            np.testing.assert_allclose(swap, swap_sign * q, atol=scale)


@pytest.mark.parametrize("alpha", [0.0, 1.0])
@pytest.mark.parametrize("gamma", [-0.5, 0.5])
def test_cross_gram_through_degree_5(alpha, gamma):
    b = GBasis(WeightSpec1D.shifted_laguerre(alpha), gamma, 5)
    for d1 in range(6):
        for d2 in range(d1, 6):
            g = gram_matrix(b, d1, 8, d2)
            diag = np.sqrt(np.outer(np.diag(gram_matrix(b, d1, 8)), np.diag(gram_matrix(b, d2, 8))))
            off = g / diag
            if d1 == d2:
                off = off - np.eye(len(off))
            assert np.max(np.abs(off)) <= 1e-8


def test_omega_gram(w0):
    b = OmegaBasis(w0, -0.5, max_n=4)
    g = gram_matrix(b, 3, 8)
    assert np.max(np.abs(g - np.diag(np.diag(g)))) <= 1e-10 * np.max(np.diag(g))
    assert np.max(np.abs(gram_matrix(b, 1, 8, 3))) <= 1e-10 * np.max(np.diag(g))


def test_laguerre_closed_form_family1_shifted_argument():
    for alpha in (0.0, 0.5):
        for n in range(1, 4):
            for k in range(n + 1):
                for th, ph in [(0.3, 0.9), (1.7, 0.2), (1.1, 1.4)]:
                    gen = laguerre_explicit_even(alpha, k, n, th, ph)
                    lit = laguerre_closed_form_even(alpha, k, n, th, ph)
                    scale = (-1) ** (n + k) * math.factorial(n) * math.factorial(k)
                    assert gen == pytest.approx(scale * lit, rel=1e-9, abs=1e-9)


def test_laguerre_explicit_k1_n1_example():
    p1 = lambda z: z - 2.0
    th, ph = 0.8, 0.35
    gen = laguerre_explicit_even(0.0, 1, 1, th, ph)
    assert gen == pytest.approx(2 * p1(math.cosh(th - ph)) * p1(math.cosh(th + ph)), rel=1e-12)
