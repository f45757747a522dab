import itertools
import math

import numpy as np
import pytest
import sympy as sp
from numpy.testing import assert_allclose

from chebprob.cheb_core import ChebKind
from chebprob.coeffs import (
    ParamVector,
    b_coeffs,
    big_B,
    big_B_closed,
    complete_homogeneous,
    elementary_symmetric,
    gamma_ab,
    partial_fractions,
    partial_fractions_closed,
    phi_product,
    sym_funcs,
    t2_closed,
    t_coeff,
    t_coeffs,
    two_pole_split,
)
from chebprob.errors import DomainError, IllConditioned, Unsupported
from chebprob.quadrature import gauss_cheb_rule


def _params(rng, n):
    while True:
        pv = ParamVector(tuple(rng.uniform(-0.9, 0.9, n)))
        if pv.min_separation() > 1e-3:
            return pv


def _quad_B(pv):
    r = gauss_cheb_rule(ChebKind.FIRST, 512)
    return 1.0 / np.dot(r.weights, phi_product(pv, r.nodes))


def test_two_parameter_example():
    # a = (1/2, -1/2): P = 1 + 1/4, B = 2P/(P + 1) = 10/9
    assert_allclose(big_B([0.5, -0.5]), 10 / 9, rtol=1e-15)
    assert_allclose(b_coeffs([0.5, -0.5]), [1.3, 1.3], rtol=1e-14)


def test_single_parameter():
    # one pole: b = 1, B = 1 for every a
    for a in (-0.8, 0.0, 0.6):
        assert b_coeffs([a]) == [1.0]
        assert big_B([a]) == 1.0


def test_B_matches_quadrature():
    rng = np.random.default_rng(1)
    for n in range(1, 8):
        pv = _params(rng, n)
        assert_allclose(big_B(pv), _quad_B(pv), rtol=1e-12)


def test_closed_normalizers():
    rng = np.random.default_rng(2)
    for n in (2, 3, 4):
        for _ in range(50):
            pv = _params(rng, n)
            assert_allclose(big_B_closed(pv), big_B(pv), rtol=1e-11)


def test_alternative_readings_disagree():
    pv = ParamVector((0.7, -0.2, 0.5))
    assert abs(big_B_closed(pv, "printed") / big_B(pv) - 1) > 1e-3
    pv = ParamVector((0.7, -0.2, 0.5, -0.6))
    assert abs(big_B_closed(pv, "printed") / big_B(pv) - 1) > 1e-3


def test_closed_normalizer_unsupported():
    with pytest.raises(Unsupported):
        big_B_closed([0.1, 0.2, 0.3, 0.4, 0.5])
    with pytest.raises(ValueError):
        big_B_closed([0.1, 0.2], reading="other")


def test_symbolic_b_sum_two_parameters():
    a1, a2 = sp.symbols("a1 a2")
    b1 = (2 * a1 - a2 - a1 ** 2 * a2) / ((a1 - a2) * (1 - a1 * a2))
    b2 = (2 * a2 - a1 - a2 ** 2 * a1) / ((a2 - a1) * (1 - a1 * a2))
    assert sp.simplify(b1 + b2 - 1 - 2 / (1 - a1 * a2)) == 0


def test_symbolic_four_parameter_normalizer():
    a = sp.symbols("a1:5")
    b = []
    for k in range(4):
        prod = sp.Integer(1)
        for j in range(4):
            if j != k:
                prod *= (2 * a[k] - a[j] - a[k] ** 2 * a[j]) / ((a[k] - a[j]) * (1 - a[k] * a[j]))
        b.append(prod)
    S = [sp.Integer(1)] + [sum(sp.prod(c) for c in itertools.combinations(a, k)) for k in range(1, 5)]
    P = sp.prod([1 - a[i] * a[j] for i, j in itertools.combinations(range(4), 2)])
    den = P + 7 - 3 * S[2] + S[3] * (S[1] - S[3]) - S[4] * (4 - 3 * S[2] + 3 * S[4])
    vals = dict(zip(a, [sp.Rational(1, 3), sp.Rational(-1, 2), sp.Rational(1, 5), sp.Rational(2, 7)]))
    lhs = (16 / (1 + sum(b))).subs(vals)
    assert sp.simplify(lhs - (8 * P / den).subs(vals)) == 0


def test_symmetric_functions():
    a = [0.3, -0.5, 0.7]
    e = elementary_symmetric(a)
    assert_allclose(e, [1, 0.5, 0.3 * -0.5 + 0.3 * 0.7 - 0.5 * 0.7, 0.3 * -0.5 * 0.7])
    h = complete_homogeneous(a, 2)
    assert_allclose(h[2], sum(x * y for x, y in itertools.combinations_with_replacement(a, 2)))
    sf = sym_funcs(a)
    assert sf.S_k(0) == 1.0 and sf.S_k(4) == 0.0
    assert_allclose(sf.P, (1 + 0.15) * (1 - 0.21) * (1 + 0.35))
    assert_allclose(sf.delta(2), h[2])


def test_t_coefficients():
    rng = np.random.default_rng(3)
    for n in (2, 3, 5):
        pv = _params(rng, n)
        b = b_coeffs(pv)
        t = t_coeffs(pv, 8)
        for j in range(9):
            ref = math.fsum(bk * ak ** j for bk, ak in zip(b, pv.a))
            assert_allclose(t[j], ref, rtol=1e-12, atol=1e-14)
            assert_allclose(t_coeff(j, pv), ref, rtol=1e-10, atol=1e-12)


def test_t2_closed_has_no_difference_quotient():
    # close parameters would make b_k ill-conditioned; the closed form is not
    a1, a2 = 0.5, 0.5 + 1e-5
    ref = t2_closed(3, a1, a2)
    lim = t2_closed(3, 0.5, 0.5)
    assert abs(ref - lim) < 1e-3
    assert_allclose(t2_closed(0, 0.2, -0.4), 1 + 2 / (1 + 0.08))


def test_permutation_invariance():
    a = (0.7, -0.3, 0.1, 0.45)
    B = big_B(a)
    for p in itertools.permutations(a):
        assert_allclose(big_B(p), B, rtol=1e-14)


def test_gamma():
    assert gamma_ab(0.5, 0.2) == pytest.approx(1.0 - 0.2 - 0.05)


def test_resolvent():
    x = np.linspace(-1, 1, 21)
    a, b = 0.6, -0.25
    p, q = two_pole_split(a, b)
    Da, Db = 1 + a * a - 2 * a * x, 1 + b * b - 2 * b * x
    assert_allclose(p / Da + q / Db, 1 / (Da * Db), rtol=1e-13)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_partial_fraction_reconstruction(n):
    rng = np.random.default_rng(n)
    x = np.linspace(-0.999, 0.999, 501)
    pv = _params(rng, n)
    for pf in (partial_fractions(pv), partial_fractions_closed(pv)):
        assert_allclose(pf(x), phi_product(pv, x), atol=1e-10)
        assert len(pf.terms) == n
        assert pf.constant == 0.5 ** n


def test_validation():
    with pytest.raises(IllConditioned):
        b_coeffs([0.3, 0.3])
    with pytest.raises(DomainError):
        ParamVector((0.2, 1.0))
    with pytest.raises(DomainError):
        ParamVector(())
    assert ParamVector((0.1,)).min_separation() == math.inf
